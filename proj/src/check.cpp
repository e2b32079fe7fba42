#include "unip/check.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "unip/count.hpp"
#include "unip/descent.hpp"
#include "unip/genfun.hpp"
#include "unip/pbp.hpp"
#include "unip/realforms.hpp"
#include "unip/weyl.hpp"

namespace unip {

namespace {

void fail(CheckResult& result, const std::string& detail) {
  ++result.failures;
  if (result.detail.empty()) result.detail = detail;
}

template <typename F>
void count_case(CheckResult& result, bool ok, F&& describe) {
  ++result.cases;
  if (!ok) fail(result, describe());
}

std::string wp_text(const PPSubset& wp) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < wp.size(); ++i) out << (i ? " " : "") << wp[i].first;
  out << '}';
  return out.str();
}

long long pbp_count_for_group(Label star, const GroupForm& group, const YoungDiagram& d,
                              const PPSubset& wp) {
  long long count = 0;
  for (const PaintedBipartition& t : enumerate_pbp(star, d, wp)) {
    if (group.uses_signature()) {
      const Signature sig = pbp_signature(t);
      if (sig.p == group.p && sig.q == group.q) ++count;
    } else if (t.total() == group.n) {
      ++count;
    }
  }
  return count;
}

}  // namespace

namespace {

bool size_matches_family(Family fam, int size) {
  switch (fam) {
    case Family::GL: return true;
    case Family::B: return size % 2 == 1;
    case Family::C:
    case Family::D: return size % 2 == 0;
  }
  return false;
}

}  // namespace

std::vector<YoungDiagram> good_parity_orbits(Label star, int size) {
  std::vector<YoungDiagram> out;
  if (!size_matches_family(dual_family(star), size)) return out;
  for (const YoungDiagram& d : partitions_of(size)) {
    bool good = is_valid_orbit(d, dual_family(star));
    for (int row : d.rows()) good = good && good_parity(row, star, size);
    if (good) out.push_back(d);
  }
  return out;
}

std::vector<YoungDiagram> valid_orbits(Label star, int size) {
  std::vector<YoungDiagram> out;
  if (!size_matches_family(dual_family(star), size)) return out;
  for (const YoungDiagram& d : partitions_of(size))
    if (is_valid_orbit(d, dual_family(star))) out.push_back(d);
  return out;
}

std::vector<GroupForm> group_forms(Label star, const YoungDiagram& d) {
  std::vector<GroupForm> out;
  const int size = d.size();
  switch (real_pattern(star)) {
    case Label::AR: out.push_back(GroupForm::rank(Label::AR, size)); break;
    case Label::AH:
      if (size % 2 == 0) out.push_back(GroupForm::rank(Label::AH, size));
      break;
    case Label::A:
    case Label::At:
      for (int p = 0; p <= size; ++p) out.push_back(GroupForm::signature(star, p, size - p));
      break;
    case Label::B:
      for (int p = 0; p <= size + 1; ++p)
        out.push_back(GroupForm::signature(Label::B, p, size + 1 - p));
      break;
    case Label::D:
      for (int p = 0; p <= size; ++p) out.push_back(GroupForm::signature(Label::D, p, size - p));
      break;
    case Label::C: out.push_back(GroupForm::rank(Label::C, (size - 1) / 2)); break;
    case Label::Ct: out.push_back(GroupForm::rank(Label::Ct, size / 2)); break;
    case Label::Cstar:
      for (int p = 0; p <= size - 1; p += 2)
        out.push_back(GroupForm::signature(Label::Cstar, p, size - 1 - p));
      break;
    case Label::Dstar: out.push_back(GroupForm::rank(Label::Dstar, size / 2)); break;
    default: break;
  }
  return out;
}

namespace checks {

// ---------------------------------------------------------------------------

CheckResult diagram_properties(int max_size) {
  CheckResult result{"diagram: transpose/union/collapse algebra"};
  for (int n = 0; n <= max_size; ++n)
    for (const YoungDiagram& d : partitions_of(n)) {
      count_case(result, d.transpose().transpose() == d,
                 [&] { return "transpose not involutive on " + to_string(d); });
      for (Family fam : {Family::GL, Family::B, Family::C, Family::D}) {
        if (fam == Family::B && n % 2 == 0) continue;
        if ((fam == Family::C || fam == Family::D) && n % 2 != 0) continue;
        const YoungDiagram c = collapse(d, fam);
        count_case(result, collapse(c, fam) == c,
                   [&] { return "collapse not idempotent on " + to_string(d); });
        count_case(result, !is_valid_orbit(d, fam) || c == d,
                   [&] { return "collapse moved a valid diagram " + to_string(d); });
        if (is_valid_orbit(d, fam)) {
          const long long dim = orbit_dim(d, fam);
          count_case(result, dim % 2 == 0 && dim >= 0,
                     [&] { return "odd/negative orbit dimension on " + to_string(d); });
        }
      }
    }
  // Union algebra on a modest sweep.
  for (int n = 0; n <= std::min(max_size, 6); ++n)
    for (const YoungDiagram& a : partitions_of(n))
      for (int m = 0; m <= std::min(max_size, 6); ++m)
        for (const YoungDiagram& b : partitions_of(m)) {
          count_case(result,
                     union_rows(a, b) == union_rows(b, a) &&
                         union_cols(a, b) == union_cols(b, a),
                     [&] { return "union not commutative"; });
          count_case(result,
                     union_rows(a, YoungDiagram()) == a &&
                         union_rows(a, b).size() == a.size() + b.size(),
                     [&] { return "union unit/size failure"; });
        }
  return result;
}

CheckResult collapse_dominance(int max_size) {
  CheckResult result{"diagram: collapse = dominance maximum (exhaustive)"};
  for (int n = 0; n <= max_size; ++n)
    for (const YoungDiagram& d : partitions_of(n))
      for (Family fam : {Family::B, Family::C, Family::D}) {
        if (fam == Family::B && n % 2 == 0) continue;
        if (fam != Family::B && n % 2 != 0) continue;
        const YoungDiagram c = collapse(d, fam);
        bool ok = is_valid_orbit(c, fam) && dominates(d, c);
        for (const YoungDiagram& e : partitions_of(n)) {
          if (!is_valid_orbit(e, fam) || !dominates(d, e)) continue;
          ok = ok && dominates(c, e);
        }
        count_case(result, ok, [&] {
          return "collapse of " + to_string(d) + " is not the dominance maximum";
        });
      }
  return result;
}

CheckResult parity_properties(int max_size) {
  CheckResult result{"parity: split round-trip and membership"};
  for (Label star : {Label::AR, Label::A, Label::At, Label::B, Label::C, Label::Ct, Label::D,
                     Label::Cstar, Label::Dstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : valid_orbits(star, n)) {
        const Family fam = dual_family(star);
        if (fam == Family::B && n % 2 == 0) continue;
        if ((fam == Family::C || fam == Family::D) && n % 2 != 0) continue;
        OrbitSpec spec{star, d, Variant::Unique};
        if (is_very_even(spec) && !d.empty()) spec.variant = Variant::I;
        const ParitySplit split = split_parity(spec);
        count_case(result, union_rows(split.bad, split.good) == d,
                   [&] { return "split does not recompose " + to_string(d); });
        bool members = true;
        for (int row : split.good.rows()) members = members && good_parity(row, star, n);
        for (int row : split.bad.rows()) members = members && !good_parity(row, star, n);
        count_case(result, members,
                   [&] { return "row landed on the wrong side for " + to_string(d); });
        if (real_pattern(star) != Label::At)
          count_case(result, analytically_even(spec) == split.bad.empty(),
                     [&] { return "analytically_even mismatch on " + to_string(d); });
      }
  return result;
}

CheckResult duality_oracles(int max_size) {
  CheckResult result{"duality: structural and dimension identities"};
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D, Label::Cstar, Label::Dstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : valid_orbits(star, n)) {
        const Family fam = dual_family(star);
        if (fam == Family::B && n % 2 == 0) continue;
        if ((fam == Family::C || fam == Family::D) && n % 2 != 0) continue;
        std::vector<Variant> variants = {Variant::Unique};
        if (is_very_even(OrbitSpec{star, d, Variant::Unique}) && !d.empty())
          variants = {Variant::I, Variant::II};
        for (Variant variant : variants) {
          const OrbitSpec spec{star, d, variant};
          const ParitySplit split = split_parity(spec);
          if (!split.bad_half) continue;
          const YoungDiagram dual = bv_dual(spec);
          // Structural identity against the good/bad split.
          const OrbitSpec good_spec{star, split.good, Variant::Unique};
          const YoungDiagram expected = union_cols(
              union_cols(split.bad_half->transpose(), split.bad_half->transpose()),
              bv_dual(good_spec));
          count_case(result, dual == expected, [&] {
            return "structural identity fails for " + std::string(label_name(star)) + " " +
                   to_string(d);
          });
          // Dimension identity 2(#roots - a).
          const TauBad bad = tau_bad(star, split.bad, variant);
          long long a_value = 0;
          const Label pattern = real_pattern(star);
          if (pattern == Label::B || pattern == Label::Ct)
            a_value += a_invariant(bad.pair);
          else
            a_value += a_invariant(WPrimeIrrep::make(bad.pair.left, bad.pair.right,
                                                     bad.dec == Decoration::None
                                                         ? Decoration::I
                                                         : bad.dec));
          const CellDiagrams tau0 = cell_diagrams(star, split.good, {});
          if (pattern == Label::Ct || pattern == Label::D || pattern == Label::Dstar) {
            const Decoration dec =
                tau0.iota == tau0.jmath ? Decoration::I : Decoration::None;
            a_value += a_invariant(WPrimeIrrep::make(tau0.iota, tau0.jmath, dec));
          } else {
            a_value += a_invariant(Bipartition{tau0.iota, tau0.jmath});
          }
          const int rank = rank_of(star, d);
          const long long dim = orbit_dim(dual, g_family(star));
          count_case(result, dim == 2 * (positive_roots(star, rank) - a_value), [&] {
            return "dimension identity fails for " + std::string(label_name(star)) + " " +
                   to_string(d);
          });
        }
      }
  return result;
}

CheckResult principal_zero_extremes(int max_rank) {
  CheckResult result{"duality: principal <-> zero at small rank"};
  const auto zero = [](int boxes) { return YoungDiagram(std::vector<int>(boxes, 1)); };
  for (int n = 1; n <= max_rank; ++n) {
    struct Case {
      Label star;
      YoungDiagram principal_dual;   // principal orbit of the dual algebra
      YoungDiagram principal_image;  // bv_dual of the principal dual orbit
      YoungDiagram principal_g;      // principal orbit of g itself
      int dual_boxes;
    };
    const YoungDiagram so_principal =
        n == 1 ? YoungDiagram({1, 1}) : YoungDiagram({2 * n - 1, 1});
    // The metaplectic dual sends the principal orbit to the subregular one
    // (non-integral infinitesimal character), not to zero.
    std::vector<int> subregular{2};
    subregular.insert(subregular.end(), 2 * n - 2, 1);
    const std::vector<Case> cases = {
        {Label::AR, YoungDiagram({n}), zero(n), YoungDiagram({n}), n},
        {Label::B, YoungDiagram({2 * n}), zero(2 * n + 1), YoungDiagram({2 * n + 1}), 2 * n},
        {Label::C, YoungDiagram({2 * n + 1}), zero(2 * n), YoungDiagram({2 * n}), 2 * n + 1},
        {Label::Cstar, YoungDiagram({2 * n + 1}), zero(2 * n), YoungDiagram({2 * n}),
         2 * n + 1},
        {Label::D, so_principal, zero(2 * n), so_principal, 2 * n},
        {Label::Dstar, so_principal, zero(2 * n), so_principal, 2 * n},
        {Label::Ct, YoungDiagram({2 * n}), YoungDiagram(subregular), YoungDiagram({2 * n}),
         2 * n},
    };
    for (const auto& c : cases) {
      OrbitSpec principal{c.star, c.principal_dual, Variant::Unique};
      if (is_very_even(principal) && !principal.d.empty()) principal.variant = Variant::I;
      OrbitSpec zero_spec{c.star, zero(c.dual_boxes), Variant::Unique};
      if (is_very_even(zero_spec) && !zero_spec.d.empty()) zero_spec.variant = Variant::I;
      count_case(result, bv_dual(principal) == c.principal_image, [&] {
        return "principal image wrong for " + std::string(label_name(c.star));
      });
      count_case(result, bv_dual(zero_spec) == c.principal_g, [&] {
        return "zero does not dualize to principal for " + std::string(label_name(c.star));
      });
    }
  }
  return result;
}

CheckResult cells_properties(int max_size) {
  CheckResult result{"cells: sizes and distinctness of the left cell"};
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D, Label::Cstar, Label::Dstar})
    for (int n = 0; n <= max_size; ++n) {
      const Family fam = dual_family(star);
      if (fam == Family::B && n % 2 == 0) continue;
      if ((fam == Family::C || fam == Family::D) && n % 2 != 0) continue;
      for (const YoungDiagram& d : good_parity_orbits(star, n)) {
        int n_g = 0;
        switch (fam) {
          case Family::B: n_g = (n - 1) / 2; break;
          default: n_g = n / 2; break;
        }
        for (const PPSubset& wp : pp_subsets(star, d)) {
          const CellDiagrams cd = cell_diagrams(star, d, wp);
          count_case(result, cd.iota.size() + cd.jmath.size() == n_g, [&] {
            return "cell diagram sizes wrong for " + std::string(label_name(star)) + " " +
                   to_string(d) + " wp " + wp_text(wp);
          });
        }
        std::set<std::pair<YoungDiagram, YoungDiagram>> seen;
        for (const PPSubset& wp : pp_subsets(star, d)) {
          const CellDiagrams cd = cell_diagrams(star, d, wp);
          seen.insert({cd.iota, cd.jmath});
        }
        count_case(result, seen.size() == pp_subsets(star, d).size(), [&] {
          return "cell diagrams collide across wp for " + std::string(label_name(star)) + " " +
                 to_string(d);
        });
        const Variant variant =
            is_very_even(OrbitSpec{star, d, Variant::Unique}) && !d.empty() ? Variant::I
                                                                            : Variant::Unique;
        const auto cell = lusztig_left_cell(star, d, variant);
        const Label pattern = real_pattern(star);
        const bool wprime_good =
            pattern == Label::Ct || pattern == Label::D || pattern == Label::Dstar;
        std::set<std::string> names;
        for (const auto& element : cell) {
          YoungDiagram a = element.good.iota, b = element.good.jmath;
          if (wprime_good && b < a) std::swap(a, b);
          std::ostringstream key;
          key << to_string(element.bad.pair) << '#' << static_cast<int>(element.bad.dec)
              << '#' << to_string(a) << '|' << to_string(b);
          if (wprime_good && a == b) key << '#' << static_cast<int>(element.good_dec);
          names.insert(key.str());
        }
        count_case(result, names.size() == cell.size(), [&] {
          return "left cell entries repeat for " + std::string(label_name(star)) + " " +
                 to_string(d);
        });
      }
    }
  return result;
}

CheckResult nesting_equivalence(int max_size) {
  CheckResult result{"paint: nesting matches the literal removal condition"};
  constexpr Symbol all[] = {Symbol::Dot, Symbol::S, Symbol::R, Symbol::C, Symbol::D};
  for (int n = 0; n <= std::min(max_size, 8); ++n)
    for (const YoungDiagram& shape : partitions_of(n)) {
      std::vector<Symbol> cells(n, Symbol::Dot);
      const auto literal_valid = [&](const Painting& p) {
        // Remove {d}, {c,d}, {r,c,d}, {s,r,c,d}: remainder must be a diagram;
        // then the row/column caps.
        for (int cutoff = 3; cutoff >= 0; --cutoff) {
          std::vector<int> rows;
          for (int i = 1; i <= shape.num_rows(); ++i) {
            int len = 0;
            for (int j = 1; j <= shape.r(i); ++j)
              if (static_cast<int>(p.at(i, j)) <= cutoff) ++len;
            rows.push_back(len);
          }
          for (size_t i = 0; i + 1 < rows.size(); ++i)
            if (rows[i] < rows[i + 1]) return false;
          // Left-justified: removed boxes must form the row tails.
          for (int i = 1; i <= shape.num_rows(); ++i)
            for (int j = 1; j <= rows[i - 1]; ++j)
              if (static_cast<int>(p.at(i, j)) > cutoff) return false;
        }
        for (int i = 1; i <= shape.num_rows(); ++i) {
          int s = 0, r = 0;
          for (int j = 1; j <= shape.r(i); ++j) {
            s += p.at(i, j) == Symbol::S;
            r += p.at(i, j) == Symbol::R;
          }
          if (s > 1 || r > 1) return false;
        }
        for (int j = 1; j <= shape.num_cols(); ++j) {
          int c = 0, d = 0;
          for (int i = 1; i <= shape.c(j); ++i) {
            c += p.at(i, j) == Symbol::C;
            d += p.at(i, j) == Symbol::D;
          }
          if (c > 1 || d > 1) return false;
        }
        return true;
      };
      const std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
          const Painting p(shape, cells);
          count_case(result, is_valid_painting(p) == literal_valid(p),
                     [&] { return "nesting disagreement on " + to_string(p); });
          return;
        }
        for (Symbol s : all) {
          cells[idx] = s;
          rec(idx + 1);
        }
      };
      rec(0);
    }
  return result;
}

CheckResult pap_product_formula(int max_size) {
  CheckResult result{"paint: A^R product formula"};
  for (int n = 0; n <= max_size; ++n)
    for (const YoungDiagram& d : partitions_of(n)) {
      long long product = 1;
      const auto& rows = d.rows();
      for (size_t i = 0; i < rows.size();) {
        size_t j = i;
        while (j < rows.size() && rows[j] == rows[i]) ++j;
        product *= static_cast<long long>(j - i) + 1;
        i = j;
      }
      const long long count = static_cast<long long>(enumerate_pap(Label::AR, d).size());
      count_case(result, count == product, [&] {
        return "A^R count " + std::to_string(count) + " != product " + std::to_string(product) +
               " on " + to_string(d);
      });
      const long long ah = static_cast<long long>(enumerate_pap(Label::AH, d).size());
      bool all_even = true;
      for (int row : d.rows()) all_even = all_even && row % 2 == 0;
      count_case(result, ah == (all_even ? 1 : 0),
                 [&] { return "A^H count wrong on " + to_string(d); });
    }
  return result;
}

CheckResult wp_independence(int max_size) {
  CheckResult result{"paint: #PBP_G(O, wp) independent of wp"};
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n)) {
        const auto subsets = pp_subsets(star, d);
        if (subsets.size() == 1) continue;
        for (const GroupForm& group : group_forms(star, d)) {
          const long long base = pbp_count_for_group(star, group, d, {});
          for (const PPSubset& wp : subsets)
            count_case(result, pbp_count_for_group(star, group, d, wp) == base, [&] {
              return "wp-dependence for " + std::string(label_name(star)) + " " + to_string(d) +
                     " at " + to_string(group) + " wp " + wp_text(wp);
            });
        }
      }
  return result;
}

CheckResult quaternionic_vanishing(int max_size) {
  CheckResult result{"paint: C*/D* vanish unless quasi-distinguished with empty wp"};
  for (Label star : {Label::Cstar, Label::Dstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n)) {
        bool quasi = true;
        for (int i = 1; i <= d.num_rows() + 1; ++i)
          if (classify_star_pair(star, d, i) == PairClass::Balanced) quasi = false;
        for (const PPSubset& wp : pp_subsets(star, d)) {
          const auto all = enumerate_pbp(star, d, wp);
          if (!wp.empty() || !quasi)
            count_case(result, all.empty(), [&] {
              return "nonempty PBP for " + std::string(label_name(star)) + " " + to_string(d) +
                     " wp " + wp_text(wp);
            });
        }
      }
  return result;
}

CheckResult signature_sums(int max_size) {
  CheckResult result{"paint: signature sum is constant; B splits over B+/B-"};
  for (Label star : {Label::B, Label::D})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n))
        for (const PPSubset& wp : pp_subsets(star, d)) {
          const auto all = enumerate_pbp(star, d, wp);
          if (all.empty()) continue;
          const Signature first = pbp_signature(all.front());
          long long bplus = 0, bminus = 0;
          bool constant = true;
          for (const auto& t : all) {
            const Signature sig = pbp_signature(t);
            constant = constant && sig.p + sig.q == first.p + first.q;
            bplus += t.gamma == Gamma::BPlus;
            bminus += t.gamma == Gamma::BMinus;
          }
          count_case(result, constant,
                     [&] { return "p+q not constant on " + to_string(d); });
          if (star == Label::B)
            count_case(result, bplus + bminus == static_cast<long long>(all.size()),
                       [&] { return "B+/B- split broken on " + to_string(d); });
        }
  return result;
}

CheckResult genfun_equivalence(int max_size) {
  CheckResult result{"genfun: series equal signature-graded enumeration"};
  for (Label star : {Label::B, Label::D, Label::Cstar, Label::C, Label::Ct, Label::Dstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n))
        for (const PPSubset& wp : pp_subsets(star, d)) {
          const auto all = enumerate_pbp(star, d, wp);
          const BivariatePoly f = gf(star, d, wp);
          const Label pattern = real_pattern(star);
          if (pattern == Label::B || pattern == Label::D || pattern == Label::Cstar) {
            BivariatePoly expected;
            for (const auto& t : all) {
              const Signature sig = pbp_signature(t);
              expected += BivariatePoly::monomial(sig.p, sig.q);
            }
            count_case(result, f == expected, [&] {
              return "gf mismatch for " + std::string(label_name(star)) + " " + to_string(d) +
                     " wp " + wp_text(wp) + ": " + to_string(f) + " vs " + to_string(expected);
            });
            // Bucket decomposition agrees with tails.
            if (pattern != Label::Cstar) {
              BivariatePoly by_bucket[3];
              for (const auto& t : all) {
                const Tail tl = tail(t, d);
                const Signature sig = pbp_signature(t);
                int slot = tl.x == Symbol::D ? 0 : (tl.x == Symbol::S ? 2 : 1);
                by_bucket[slot] += BivariatePoly::monomial(sig.p, sig.q);
              }
              count_case(result,
                         gf(star, d, wp, Bucket::D) == by_bucket[0] &&
                             gf(star, d, wp, Bucket::CR) == by_bucket[1] &&
                             gf(star, d, wp, Bucket::S) == by_bucket[2],
                         [&] {
                           return "bucketed gf mismatch for " +
                                  std::string(label_name(star)) + " " + to_string(d);
                         });
            }
          } else {
            count_case(result,
                       f.eval_ones() == static_cast<long long>(all.size()), [&] {
                         return "gf count mismatch for " + std::string(label_name(star)) + " " +
                                to_string(d) + " wp " + wp_text(wp);
                       });
          }
        }
  return result;
}

CheckResult shape_shift_contracts(int max_size) {
  CheckResult result{"descent: shape shifts are mutually inverse bijections"};
  for (Label star : {Label::C, Label::Ct})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n)) {
        if (classify_star_pair(star, d, 1) != PairClass::Primitive) continue;
        for (const PPSubset& wp : pp_subsets(star, d)) {
          if (!wp.empty() && wp.front().first == 1) continue;
          PPSubset up = wp;
          up.insert(up.begin(), {1, 2});
          const auto lower = enumerate_pbp(star, d, wp);
          const auto upper = enumerate_pbp(star, d, up);
          count_case(result, lower.size() == upper.size(),
                     [&] { return "shift levels differ in size on " + to_string(d); });
          std::set<PaintedBipartition> image;
          bool ok = true;
          for (const auto& t : lower) {
            const PaintedBipartition shifted = shape_shift(t, d, wp, ShiftDirection::Up);
            image.insert(shifted);
            ok = ok && shape_shift(shifted, d, up, ShiftDirection::Down) == t;
          }
          count_case(result, ok && image.size() == lower.size(),
                     [&] { return "up/down not inverse on " + to_string(d); });
          for (const auto& t : upper)
            count_case(result, image.count(t) == 1, [&] {
              return "shift-up misses an element over " + to_string(d) + " wp " + wp_text(up);
            });
        }
      }
  return result;
}

CheckResult descent_bijectivity(int max_size) {
  CheckResult result{"descent: one-step contracts (C, C̃, D*)"};
  for (Label star : {Label::C, Label::Ct, Label::Dstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n)) {
        for (const PPSubset& wp : pp_subsets(star, d)) {
          const auto source = enumerate_pbp(star, d, wp);
          if (star == Label::Dstar && !wp.empty()) continue;
          const DualDescent child = dual_descent(star, d, wp);
          const auto target = enumerate_pbp(child.star, child.d, child.wp);
          std::set<PaintedBipartition> image;
          for (const auto& t : source) image.insert(descend(t, d, wp));
          count_case(result, image.size() == source.size(),
                     [&] { return "descent not injective on " + to_string(d); });
          const bool bijective = star == Label::Dstar || d.r(1) > d.r(2);
          if (bijective) {
            count_case(result, image.size() == target.size(), [&] {
              return "descent not surjective on " + to_string(d) + " wp " + wp_text(wp);
            });
          } else {
            std::set<PaintedBipartition> expected;
            for (const auto& t : target)
              if (tail(t, child.d).x != Symbol::S) expected.insert(t);
            count_case(result,
                       std::set<PaintedBipartition>(image) == expected, [&] {
                         return "descent image wrong on " + to_string(d) + " wp " + wp_text(wp);
                       });
          }
        }
      }
  return result;
}

CheckResult double_descent_contracts(int max_size) {
  CheckResult result{"descent: double descent bijection/image and signatures"};
  for (Label star : {Label::B, Label::D, Label::Cstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n)) {
        if (star == Label::D && d.empty()) continue;
        if (star != Label::Cstar && d.r(2) == 0) continue;
        if (star == Label::Cstar) {
          bool quasi = true;
          for (int i = 1; i <= d.num_rows() + 1; ++i)
            if (classify_star_pair(star, d, i) == PairClass::Balanced) quasi = false;
          if (!quasi) continue;
        }
        for (const PPSubset& wp : pp_subsets(star, d)) {
          if (star == Label::Cstar && !wp.empty()) continue;
          const auto source = enumerate_pbp(star, d, wp);
          const DualDescent c1 = dual_descent(star, d, wp);
          const DualDescent c2 = dual_descent(c1.star, c1.d, c1.wp);
          const auto core_set = enumerate_pbp(star, c2.d, c2.wp);

          const YoungDiagram dual = bv_dual(OrbitSpec{star, d, Variant::Unique});
          const bool case_a = star == Label::Cstar || d.r(2) > d.r(3);
          const int shift = case_a ? dual.c(2) : dual.c(2) - 1;

          std::set<std::pair<PaintedBipartition, PaintedBipartition>> image;
          bool sig_ok = true;
          for (const auto& t : source) {
            const DoubleDescent dd = double_descent(t, d, wp);
            image.insert({dd.core, dd.tail.tau});
            const Signature st = pbp_signature(t);
            const Signature sc = pbp_signature(dd.core);
            const Signature stail = pbp_signature(dd.tail.tau);
            sig_ok = sig_ok && st.p == shift + sc.p + stail.p && st.q == shift + sc.q + stail.q;
          }
          count_case(result, sig_ok,
                     [&] { return "double-descent signature formula fails on " + to_string(d); });
          count_case(result, image.size() == source.size(),
                     [&] { return "double descent not injective on " + to_string(d); });

          // Expected image.
          std::vector<PaintedBipartition> tails;
          {
            YoungDiagram tail_orbit;
            if (star == Label::Cstar) {
              const int k = (d.r(1) - d.r(2) - 1) / 2;
              tail_orbit = YoungDiagram({2 * k + 1});
              tails = enumerate_pbp(Label::Cstar, tail_orbit, {});
            } else {
              const int k = (d.r(1) - d.r(2)) / 2 + 1;
              tail_orbit = YoungDiagram(std::vector<int>{2 * k - 1, 1});
              tails = enumerate_pbp(Label::D, tail_orbit, {});
            }
          }
          long long expected_size = 0;
          for (const auto& core : core_set)
            for (const auto& tl : tails) {
              bool admissible = true;
              if (!case_a) {
                const Symbol x_core = tail(core, c2.d).x;
                if (x_core == Symbol::D) {
                  admissible = true;
                } else if (x_core == Symbol::R || x_core == Symbol::C) {
                  bool has_sc = false;
                  for (int i = 1; i <= tl.P.shape().c(1); ++i)
                    has_sc = has_sc || tl.P.at(i, 1) == Symbol::S || tl.P.at(i, 1) == Symbol::C;
                  admissible = has_sc;
                } else {
                  admissible = false;
                }
              }
              if (admissible) ++expected_size;
            }
          count_case(result, static_cast<long long>(image.size()) == expected_size, [&] {
            return "double-descent image size wrong on " + std::string(label_name(star)) + " " +
                   to_string(d) + " wp " + wp_text(wp);
          });
        }
      }
  return result;
}

CheckResult descent_injectivity(int max_size) {
  CheckResult result{"descent: (descend, p, q, eps) is injective (B, D, C*)"};
  for (Label star : {Label::B, Label::D, Label::Cstar})
    for (int n = 0; n <= max_size; ++n)
      for (const YoungDiagram& d : good_parity_orbits(star, n))
        for (const PPSubset& wp : pp_subsets(star, d)) {
          if (star == Label::Cstar && !wp.empty()) continue;
          std::set<std::tuple<PaintedBipartition, int, int, int>> seen;
          const auto source = enumerate_pbp(star, d, wp);
          for (const auto& t : source) {
            const Signature sig = pbp_signature(t);
            seen.insert({descend(t, d, wp), sig.p, sig.q, tail(t, d).eps});
          }
          count_case(result, seen.size() == source.size(), [&] {
            return "injectivity fails for " + std::string(label_name(star)) + " " +
                   to_string(d) + " wp " + wp_text(wp);
          });
        }
  return result;
}

CheckResult lr_properties(int max_size) {
  CheckResult result{"weyl: LR symmetry and dimension identity"};
  const auto hook_dim = [](const YoungDiagram& d) -> long long {
    if (d.empty()) return 1;
    long long numerator = 1;
    for (int i = 2; i <= d.size(); ++i) numerator *= i;
    long long hooks = 1;
    for (int i = 1; i <= d.num_rows(); ++i)
      for (int j = 1; j <= d.r(i); ++j) hooks *= d.r(i) - j + d.c(j) - i + 1;
    return numerator / hooks;
  };
  for (int na = 0; 2 * na <= max_size; ++na)
    for (const YoungDiagram& a : partitions_of(na))
      for (int nb = 0; na + nb <= max_size; ++nb)
        for (const YoungDiagram& b : partitions_of(nb)) {
          long long sum = 0;
          bool symmetric = true;
          for (const YoungDiagram& t : partitions_of(na + nb)) {
            const long long c = lr_coeff(a, b, t);
            symmetric = symmetric && c == lr_coeff(b, a, t);
            sum += c * hook_dim(t);
          }
          count_case(result, symmetric, [&] { return "LR symmetry fails"; });
          long long binom = 1;
          for (int i = 1; i <= nb; ++i) binom = binom * (na + i) / i;
          count_case(result, sum == binom * hook_dim(a) * hook_dim(b), [&] {
            return "LR dimension identity fails for " + to_string(a) + " * " + to_string(b);
          });
        }
  return result;
}

CheckResult special_induction_audit(int max_t) {
  CheckResult result{"weyl: special inductions pass the dimension audit"};
  const auto hook_dim = [](const YoungDiagram& d) -> long long {
    if (d.empty()) return 1;
    long long numerator = 1;
    for (int i = 2; i <= d.size(); ++i) numerator *= i;
    long long hooks = 1;
    for (int i = 1; i <= d.num_rows(); ++i)
      for (int j = 1; j <= d.r(i); ++j) hooks *= d.r(i) - j + d.c(j) - i + 1;
    return numerator / hooks;
  };
  const auto bip_dim = [&](const Bipartition& b) -> long long {
    long long binom = 1;
    for (int i = 1; i <= b.right.size(); ++i) binom = binom * (b.left.size() + i) / i;
    return binom * hook_dim(b.left) * hook_dim(b.right);
  };
  const auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (int t = 0; t <= max_t; ++t) {
    const long long w_order = factorial(t) << t;          // |W_t|
    const long long w2t_order = factorial(2 * t) << (2 * t);
    const long long h_order = w_order * (1LL << t);       // |H_t|
    long long total = 0;
    for (const auto& b : special_induction(SpecialInduction::HetaToW, t).bipartitions)
      total += bip_dim(b);
    count_case(result, total == w2t_order / h_order,
               [&] { return "H_t -> W_{2t} audit fails at t=" + std::to_string(t); });
    total = 0;
    for (const auto& b : special_induction(SpecialInduction::SsgnToW, t).bipartitions)
      total += bip_dim(b);
    count_case(result, total == w_order / factorial(t),
               [&] { return "S_t sgn -> W_t audit fails at t=" + std::to_string(t); });
    total = 0;
    for (const auto& b : special_induction(SpecialInduction::StrivToW, t).bipartitions)
      total += bip_dim(b);
    count_case(result, total == w_order / factorial(t),
               [&] { return "S_t triv -> W_t audit fails at t=" + std::to_string(t); });
    total = 0;
    for (const auto& s : special_induction(SpecialInduction::WepsToS, t).partitions)
      total += hook_dim(s);
    count_case(result, total == factorial(2 * t) / w_order,
               [&] { return "W_t eps -> S_{2t} audit fails at t=" + std::to_string(t); });
    total = 0;
    for (const auto& s : special_induction(SpecialInduction::WtrivToS, t).partitions)
      total += hook_dim(s);
    count_case(result, total == factorial(2 * t) / w_order,
               [&] { return "W_t triv -> S_{2t} audit fails at t=" + std::to_string(t); });
  }
  return result;
}

CheckResult oracle_equality(int max_rank) {
  CheckResult result{"weyl: left-cell multiplicity sum equals the PBP product"};
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D, Label::Cstar, Label::Dstar}) {
    for (int rank = 0; rank <= max_rank; ++rank) {
      int size = 0;
      switch (dual_family(star)) {
        case Family::B: size = 2 * rank + 1; break;
        default: size = 2 * rank; break;
      }
      for (const YoungDiagram& d : valid_orbits(star, size)) {
        std::vector<Variant> variants = {Variant::Unique};
        if (is_very_even(OrbitSpec{star, d, Variant::Unique}) && !d.empty())
          variants = {Variant::I, Variant::II};
        for (Variant variant : variants) {
          const OrbitSpec spec{star, d, variant};
          const ParitySplit split = split_parity(spec);
          if (!split.bad_half) continue;
          for (const GroupForm& group : group_forms(star, d)) {
            const long long lhs = coh_left_cell_sum(group, spec);
            long long rhs = 0;
            const bool dstar_irrelevant =
                real_pattern(star) == Label::Dstar && split.good.empty() && !d.empty() &&
                bad_part_type(star, split.bad, variant) == BadPartType::II;
            if (!dstar_irrelevant) {
              const long long bad =
                  static_cast<long long>(enumerate_pbp_bad(star, split.bad).size());
              long long good = 0;
              GroupForm gg = group;
              if (group.uses_signature()) {
                gg.p -= split.n_b;
                gg.q -= split.n_b;
                gg.n -= split.n_b;
              } else {
                gg.n -= split.n_b;
              }
              for (const PPSubset& wp : pp_subsets(star, split.good))
                good += pbp_count_for_group(star, gg, split.good, wp);
              rhs = bad * good;
            }
            count_case(result, lhs == rhs, [&] {
              return "oracle mismatch for " + std::string(label_name(star)) + " " +
                     to_string(d) + " at " + to_string(group) + ": " + std::to_string(lhs) +
                     " vs " + std::to_string(rhs);
            });
          }
        }
      }
    }
  }
  return result;
}

CheckResult gl_oracle_equality(int max_rank) {
  CheckResult result{"weyl: GL coherent multiplicity equals #PAP"};
  for (Label star : {Label::AR, Label::AH})
    for (int n = 0; n <= max_rank; ++n) {
      if (star == Label::AH && n % 2 != 0) continue;
      for (const YoungDiagram& d : partitions_of(n)) {
        const OrbitSpec spec{star, d, Variant::Unique};
        const long long lhs = coh_multiplicity_gl(star, spec);
        const long long rhs = static_cast<long long>(enumerate_pap(star, d).size());
        count_case(result, lhs == rhs, [&] {
          return "GL oracle mismatch for " + std::string(label_name(star)) + " " + to_string(d);
        });
      }
    }
  return result;
}

CheckResult unitary_realform_equality(int max_pq) {
  CheckResult result{"realforms: signature-filtered PAP equals U(p,q) orbit count"};
  for (int total = 0; total <= max_pq; ++total)
    for (const YoungDiagram& d : partitions_of(total)) {
      bool good = true;
      for (int row : d.rows()) good = good && good_parity(row, Label::A, total);
      if (!good) continue;
      const OrbitSpec spec{Label::A, d, Variant::Unique};
      const YoungDiagram dual = bv_dual(spec);
      for (int p = 0; p <= total; ++p) {
        const GroupForm group = GroupForm::signature(Label::A, p, total - p);
        long long lhs = 0;
        for (const Painting& painting : enumerate_pap(Label::A, d)) {
          const Signature sig = pap_signature(painting);
          if (sig.p == p && sig.q == total - p) ++lhs;
        }
        const long long rhs = count_real_orbits(group, dual);
        count_case(result, lhs == rhs, [&] {
          return "U(p,q) mismatch for " + to_string(d) + " at p=" + std::to_string(p) + ": " +
                 std::to_string(lhs) + " vs " + std::to_string(rhs);
        });
      }
    }
  return result;
}

CheckResult quaternionic_realform_equality(int max_rank) {
  CheckResult result{"realforms: #PBP_G equals C*/D* real orbit count"};
  for (Label star : {Label::Cstar, Label::Dstar})
    for (int rank = 0; rank <= max_rank; ++rank) {
      const int size = star == Label::Cstar ? 2 * rank + 1 : 2 * rank;
      for (const YoungDiagram& d : good_parity_orbits(star, size)) {
        const OrbitSpec spec{star, d, Variant::Unique};
        const YoungDiagram dual = bv_dual(spec);
        for (const GroupForm& group : group_forms(star, d)) {
          const long long lhs = pbp_count_for_group(star, group, d, {});
          const long long rhs = count_real_orbits(group, dual);
          count_case(result, lhs == rhs, [&] {
            return "real-orbit mismatch for " + std::string(label_name(star)) + " " +
                   to_string(d) + " at " + to_string(group) + ": " + std::to_string(lhs) +
                   " vs " + std::to_string(rhs);
          });
        }
      }
    }
  return result;
}

CheckResult count_triple_agreement(int max_rank) {
  CheckResult result{"count: enumeration, genfun, and oracle routes agree"};
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D, Label::Cstar, Label::Dstar})
    for (int rank = 0; rank <= max_rank; ++rank) {
      int size = 0;
      switch (dual_family(star)) {
        case Family::B: size = 2 * rank + 1; break;
        default: size = 2 * rank; break;
      }
      for (const YoungDiagram& d : valid_orbits(star, size)) {
        std::vector<Variant> variants = {Variant::Unique};
        if (is_very_even(OrbitSpec{star, d, Variant::Unique}) && !d.empty())
          variants = {Variant::I, Variant::II};
        for (Variant variant : variants)
          for (const GroupForm& group : group_forms(star, d)) {
            ++result.cases;
            try {
              unip_count(group, OrbitSpec{star, d, variant}, /*verify=*/true);
            } catch (const Error& e) {
              fail(result, e.what());
            }
          }
      }
    }
  return result;
}

}  // namespace checks

std::vector<CheckResult> run_checks(int max_size, int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("UNIP_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = 1;
  }
  const int rank_cap = std::min(max_size / 2, 6);
  std::vector<std::function<CheckResult()>> jobs = {
      [=] { return checks::diagram_properties(max_size); },
      [=] { return checks::collapse_dominance(std::min(max_size, 10)); },
      [=] { return checks::parity_properties(max_size); },
      [=] { return checks::duality_oracles(max_size); },
      [=] { return checks::principal_zero_extremes(5); },
      [=] { return checks::cells_properties(max_size); },
      [=] { return checks::nesting_equivalence(std::min(max_size, 8)); },
      [=] { return checks::pap_product_formula(std::min(max_size, 10)); },
      [=] { return checks::wp_independence(max_size); },
      [=] { return checks::quaternionic_vanishing(max_size); },
      [=] { return checks::signature_sums(max_size); },
      [=] { return checks::genfun_equivalence(max_size); },
      [=] { return checks::shape_shift_contracts(max_size); },
      [=] { return checks::descent_bijectivity(max_size); },
      [=] { return checks::double_descent_contracts(max_size); },
      [=] { return checks::descent_injectivity(max_size); },
      [=] { return checks::lr_properties(std::min(max_size, 8)); },
      [=] { return checks::special_induction_audit(5); },
      [=] { return checks::oracle_equality(rank_cap); },
      [=] { return checks::gl_oracle_equality(rank_cap); },
      [=] { return checks::unitary_realform_equality(std::min(max_size, 8)); },
      [=] { return checks::quaternionic_realform_equality(rank_cap); },
      [=] { return checks::count_triple_agreement(rank_cap); },
  };
  std::vector<CheckResult> results(jobs.size());
  if (threads <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    return results;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      while (true) {
        const size_t idx = next.fetch_add(1);
        if (idx >= jobs.size()) break;
        results[idx] = jobs[idx]();
      }
    });
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace unip
