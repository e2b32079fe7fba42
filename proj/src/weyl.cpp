#include "unip/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "unip/parity.hpp"

namespace unip {

namespace {

// Counts LR skew tableaux of shape target/inner with content `content`:
// semistandard filling whose reverse reading word is a ballot word.
long long count_lr_tableaux(const YoungDiagram& inner, const YoungDiagram& content,
                            const YoungDiagram& target) {
  const int rows = target.num_rows();
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(target.r(i + 1), 0);
  std::vector<int> used(content.num_rows() + 2, 0);

  // Cells in reverse reading order: rows top to bottom, right to left.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= rows; ++i)
    for (int j = target.r(i); j > inner.r(i); --j) cells.emplace_back(i, j);

  long long total = 0;
  const int values = content.num_rows();
  auto dfs = [&](auto&& self, size_t pos) -> void {
    if (pos == cells.size()) {
      ++total;
      return;
    }
    const auto [i, j] = cells[pos];
    for (int v = 1; v <= values; ++v) {
      if (used[v] >= content.r(v)) continue;
      if (v > 1 && used[v] >= used[v - 1]) continue;           // ballot condition
      if (j < target.r(i) && fill[i - 1][j] < v) continue;     // weak rows (right neighbor)
      if (i > 1 && j <= target.r(i - 1) && j > inner.r(i - 1) && fill[i - 2][j - 1] >= v)
        continue;                                              // strict columns
      fill[i - 1][j - 1] = v;
      ++used[v];
      self(self, pos + 1);
      --used[v];
      fill[i - 1][j - 1] = 0;
    }
  };
  dfs(dfs, 0);
  return total;
}

std::string lr_key(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& t) {
  return to_string(a) + "#" + to_string(b) + "#" + to_string(t);
}

}  // namespace

long long lr_coeff(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& target) {
  if (a.size() + b.size() != target.size())
    throw SizeMismatch("LR coefficient needs |a| + |b| = |target|");
  if (!target.contains(a)) return 0;
  thread_local std::map<std::string, long long> memo;
  const std::string key = lr_key(a, b, target);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long long value = count_lr_tableaux(a, b, target);
  memo.emplace(key, value);
  return value;
}

long long lr_multi(const std::vector<YoungDiagram>& factors, const YoungDiagram& target) {
  std::map<YoungDiagram, long long> states;
  int total = 0;
  for (const auto& f : factors) total += f.size();
  if (total != target.size()) return 0;
  states[YoungDiagram()] = 1;
  int size = 0;
  for (const auto& f : factors) {
    size += f.size();
    std::map<YoungDiagram, long long> next;
    for (const auto& mid : partitions_of(size)) {
      if (!target.contains(mid)) continue;
      for (const auto& [shape, mult] : states) {
        if (!mid.contains(shape)) continue;
        const long long c = lr_coeff(shape, f, mid);
        if (c) next[mid] += mult * c;
      }
    }
    states = std::move(next);
  }
  auto it = states.find(target);
  return it == states.end() ? 0 : it->second;
}

VirtualRep induct_bipartitions(const Bipartition& x, const Bipartition& y) {
  VirtualRep out;
  for (const auto& left : partitions_of(x.left.size() + y.left.size())) {
    const long long cl = lr_coeff(x.left, y.left, left);
    if (!cl) continue;
    for (const auto& right : partitions_of(x.right.size() + y.right.size())) {
      const long long cr = lr_coeff(x.right, y.right, right);
      if (cr) out[Bipartition{left, right}] += cl * cr;
    }
  }
  return out;
}

SpecialInductionResult special_induction(SpecialInduction kind, int t) {
  SpecialInductionResult out;
  switch (kind) {
    case SpecialInduction::HetaToW:
      for (const auto& sigma : partitions_of(t))
        out.bipartitions.push_back(Bipartition{sigma, sigma});
      break;
    case SpecialInduction::HetaToWp:
      for (const auto& sigma : partitions_of(t))
        out.wprime.push_back(WPrimeIrrep::make(sigma, sigma, Decoration::I));
      break;
    case SpecialInduction::SsgnToW:
      for (int s = 0; s <= t; ++s) {
        const int r = t - s;
        out.bipartitions.push_back(
            Bipartition{YoungDiagram(std::vector<int>(s, 1)), YoungDiagram(std::vector<int>(r, 1))});
      }
      break;
    case SpecialInduction::StrivToW:
      for (int c = 0; c <= t; ++c) {
        const int d = t - c;
        out.bipartitions.push_back(Bipartition{c ? YoungDiagram({c}) : YoungDiagram(),
                                               d ? YoungDiagram({d}) : YoungDiagram()});
      }
      break;
    case SpecialInduction::WepsToS:
      for (const auto& sigma : partitions_of(2 * t)) {
        bool even = true;
        for (int j = 1; j <= sigma.num_cols(); ++j) even = even && sigma.c(j) % 2 == 0;
        if (even) out.partitions.push_back(sigma);
      }
      break;
    case SpecialInduction::WtrivToS:
      for (const auto& sigma : partitions_of(2 * t)) {
        bool even = true;
        for (int row : sigma.rows()) even = even && row % 2 == 0;
        if (even) out.partitions.push_back(sigma);
      }
      break;
  }
  return out;
}

namespace {

long long n_stat(const YoungDiagram& d) {  // n(λ) = Σ (i-1) λ_i
  long long sum = 0;
  for (int i = 1; i <= d.num_rows(); ++i) sum += static_cast<long long>(i - 1) * d.r(i);
  return sum;
}

}  // namespace

long long a_invariant(const YoungDiagram& partition) { return n_stat(partition); }

long long a_invariant(const Bipartition& b) {
  return 2 * n_stat(b.left) + 2 * n_stat(b.right) + b.right.size();
}

long long a_invariant(const WPrimeIrrep& w) {
  return 2 * n_stat(w.pair.left) + 2 * n_stat(w.pair.right) +
         std::min(w.pair.left.size(), w.pair.right.size());
}

std::vector<WPrimeIrrep> restrict_to_wprime(const Bipartition& x) {
  if (x.left == x.right)
    return {WPrimeIrrep::make(x.left, x.right, Decoration::I),
            WPrimeIrrep::make(x.left, x.right, Decoration::II)};
  return {WPrimeIrrep::make(x.left, x.right, Decoration::None)};
}

// ---------------------------------------------------------------------------
// Coherent continuation multiplicities.

namespace {

YoungDiagram column(int k) { return YoungDiagram(std::vector<int>(k, 1)); }
YoungDiagram row(int k) { return k ? YoungDiagram({k}) : YoungDiagram(); }

std::vector<YoungDiagram> contained_partitions(int t, const YoungDiagram& bound) {
  std::vector<YoungDiagram> out;
  for (const auto& sigma : partitions_of(t))
    if (bound.contains(sigma)) out.push_back(sigma);
  return out;
}

}  // namespace

long long coh_multiplicity_bad(Label star, const TauBad& tau_b, int n_b) {
  const YoungDiagram& lambda = tau_b.pair.left;
  const YoungDiagram& mu = tau_b.pair.right;
  if (lambda.size() + mu.size() != n_b) throw RankMismatch("bad factor rank");
  switch (real_pattern(star)) {
    case Label::B:
    case Label::Ct: {
      long long total = 0;
      const int free = lambda.size() - mu.size();
      for (int c = 0; c <= free; ++c)
        total += lr_multi({mu, row(c), row(free - c)}, lambda);
      return total;
    }
    case Label::C:
    case Label::D: {
      if (!(lambda == mu)) return 0;
      long long total = 0;
      for (int t = 0; t <= lambda.size(); ++t)
        for (const auto& sigma : contained_partitions(t, lambda)) {
          const long long c = lr_coeff(sigma, row(lambda.size() - t), lambda);
          total += c * c;
        }
      return total;
    }
    case Label::Cstar:
    case Label::Dstar:
      if (!(lambda == mu)) return 0;
      return tau_b.dec == Decoration::I ? 1 : 0;
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
}

long long coh_multiplicity_good(Label star, const GroupForm& group_good,
                                const Bipartition& target) {
  const YoungDiagram& lambda = target.left;
  const YoungDiagram& mu = target.right;
  const int n = target.rank();
  long long total = 0;
  switch (real_pattern(star)) {
    case Label::B: {
      const int pg = group_good.p, qg = group_good.q;
      if (pg < 0 || qg < 0) return 0;
      if (pg + qg != 2 * n + 1) throw RankMismatch("good factor rank (B)");
      for (int t = 0; t <= mu.size(); ++t)
        for (const auto& sigma : contained_partitions(t, mu)) {
          const int c = lambda.size() - t;
          if (c < 0) continue;
          const long long left_mult = lr_coeff(sigma, row(c), lambda);
          if (!left_mult) continue;
          for (int d = 0; d + t <= mu.size(); ++d)
            for (int s = 0; t + d + s <= mu.size(); ++s) {
              const int r = mu.size() - t - d - s;
              const int a = c + d;
              const int dp = pg - (2 * t + a + 2 * r);
              const int dq = qg - (2 * t + a + 2 * s);
              if (dp < 0 || dp > 1 || dq < 0 || dq > 1) continue;
              total += left_mult * lr_multi({sigma, row(d), column(s), column(r)}, mu);
            }
        }
      return total;
    }
    case Label::C: {
      if (group_good.n != n) throw RankMismatch("good factor rank (C)");
      for (int t = 0; t <= mu.size(); ++t)
        for (const auto& sigma : contained_partitions(t, mu)) {
          const int r = mu.size() - t;
          const long long right_mult = lr_coeff(sigma, column(r), mu);
          if (!right_mult) continue;
          for (int s = 0; t + s <= lambda.size(); ++s)
            for (int c = 0; t + s + c <= lambda.size(); ++c) {
              const int d = lambda.size() - t - s - c;
              total += right_mult * lr_multi({sigma, column(s), row(c), row(d)}, lambda);
            }
        }
      return total;
    }
    case Label::Ct: {
      if (group_good.n != n) throw RankMismatch("good factor rank (C̃)");
      for (int t = 0; t <= std::min(lambda.size(), mu.size()); ++t)
        for (const auto& sigma : contained_partitions(t, lambda)) {
          if (!mu.contains(sigma)) continue;
          for (int s = 0; t + s <= lambda.size(); ++s) {
            const int c = lambda.size() - t - s;
            const long long left_mult = lr_multi({sigma, column(s), row(c)}, lambda);
            if (!left_mult) continue;
            for (int r = 0; t + r <= mu.size(); ++r) {
              const int d = mu.size() - t - r;
              total += left_mult * lr_multi({sigma, column(r), row(d)}, mu);
            }
          }
        }
      return total;
    }
    case Label::Cstar: {
      const int pg = group_good.p, qg = group_good.q;
      if (pg < 0 || qg < 0) return 0;
      if (pg + qg != 2 * n) throw RankMismatch("good factor rank (C*)");
      const int t = lambda.size();
      const int r = pg / 2 - t, s = qg / 2 - t;
      if (r < 0 || s < 0 || t + r + s != mu.size()) return 0;
      return lr_multi({lambda, column(s), column(r)}, mu);
    }
    case Label::D: {
      const int pg = group_good.p, qg = group_good.q;
      if (pg < 0 || qg < 0) return 0;
      if (pg + qg != 2 * n) throw RankMismatch("good factor rank (D)");
      // Ind_{W'_c}^{W_c} 1 splits as ([c],0) + (0,[c]); c = 0 contributes once.
      {
        // Summand with [c] on the left slot: the right slots force sigma = mu.
        const int t = mu.size();
        const int rest = lambda.size() - t;
        for (int s = 0; s <= rest; ++s)
          for (int r = 0; s + r <= rest; ++r)
            for (int c = 0; s + r + c <= rest; ++c) {
              const int d = rest - s - r - c;
              if (2 * t + c + d + 2 * r != pg || 2 * t + c + d + 2 * s != qg) continue;
              total += lr_multi({mu, column(s), column(r), row(c), row(d)}, lambda);
            }
      }
      for (int c = 1; c <= mu.size(); ++c)
        // Summand with [c] on the right slot.
        for (int t = 0; t + c <= mu.size(); ++t)
          for (const auto& sigma : contained_partitions(t, mu)) {
            const long long right_mult = lr_coeff(sigma, row(c), mu);
            if (!right_mult) continue;
            const int rest = lambda.size() - t;
            for (int s = 0; s <= rest; ++s)
              for (int r = 0; s + r <= rest; ++r) {
                const int d = rest - s - r;
                if (2 * t + c + d + 2 * r != pg || 2 * t + c + d + 2 * s != qg) continue;
                total += right_mult * lr_multi({sigma, column(s), column(r), row(d)}, lambda);
              }
          }
      return total;
    }
    case Label::Dstar: {
      if (group_good.n != n) throw RankMismatch("good factor rank (D*)");
      for (int t = 0; t <= std::min(lambda.size(), mu.size()); ++t)
        for (const auto& sigma : contained_partitions(t, lambda)) {
          const int s = lambda.size() - t;
          const int r = mu.size() - t;
          const long long left_mult = lr_coeff(sigma, column(s), lambda);
          if (left_mult) total += left_mult * lr_coeff(sigma, column(r), mu);
        }
      return total;
    }
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
}

namespace {

GroupForm good_part_group(const GroupForm& group, int n_b) {
  switch (real_pattern(group.label)) {
    case Label::B:
    case Label::D:
    case Label::Cstar:
      return GroupForm{group.label, group.p - n_b, group.q - n_b, group.n - n_b};
    default:
      return GroupForm{group.label, 0, 0, group.n - n_b};
  }
}

}  // namespace

long long coh_multiplicity(Label star, const GroupForm& group, const OrbitSpec& spec,
                           const LeftCellElement& element) {
  if (group.label != star) throw WrongLabel("group and orbit labels differ");
  const ParitySplit split = split_parity(spec);
  if (!split.bad_half) return 0;
  const long long factor_b = coh_multiplicity_bad(star, element.bad, split.n_b);
  if (!factor_b) return 0;
  const GroupForm gg = good_part_group(group, split.n_b);
  const Bipartition target{element.good.iota, element.good.jmath};
  long long factor_g = 0;
  switch (real_pattern(star)) {
    case Label::Ct: {
      const PPSubset pp = primitive_pairs(star, split.good);
      if (pp.empty()) {
        factor_g = coh_multiplicity_good(star, gg, target);
      } else {
        PPSubset complement;
        for (const auto& pair : pp)
          if (std::find(element.wp.begin(), element.wp.end(), pair) == element.wp.end())
            complement.push_back(pair);
        const CellDiagrams other = cell_diagrams(star, split.good, complement);
        factor_g = coh_multiplicity_good(star, gg, target) +
                   coh_multiplicity_good(star, gg, Bipartition{other.iota, other.jmath});
      }
      break;
    }
    default:
      factor_g = coh_multiplicity_good(star, gg, target);
      break;
  }
  return factor_b * factor_g;
}

long long coh_left_cell_sum(const GroupForm& group, const OrbitSpec& spec) {
  long long total = 0;
  for (const auto& element : lusztig_left_cell(spec.star, spec.d, spec.variant))
    total += coh_multiplicity(spec.star, group, spec, element);
  return total;
}

long long coh_multiplicity_gl(Label star, const OrbitSpec& spec) {
  const ParitySplit split = split_parity(spec);
  const auto factor = [star](const YoungDiagram& part) -> long long {
    const YoungDiagram target = part.transpose();
    const int l = part.size();
    if (real_pattern(star) == Label::AH) {
      if (l % 2 != 0) return 0;
      for (int j = 1; j <= target.num_cols(); ++j)
        if (target.c(j) % 2 != 0) return 0;
      return 1;
    }
    long long total = 0;
    for (int t = 0; 2 * t <= l; ++t)
      for (const auto& sigma : special_induction(SpecialInduction::WepsToS, t).partitions) {
        if (!target.contains(sigma)) continue;
        for (int c = 0; 2 * t + c <= l; ++c)
          total += lr_multi({sigma, row(c), row(l - 2 * t - c)}, target);
      }
    return total;
  };
  return factor(split.bad) * factor(split.good);
}

long long coh_multiplicity_unitary(const YoungDiagram& d_good, int p_g, int q_g) {
  if (p_g < 0 || q_g < 0) return 0;
  const YoungDiagram target = d_good.transpose();
  long long total = 0;
  for (int t = 0; t <= std::min(p_g, q_g); ++t) {
    const int r = p_g - t, s = q_g - t;
    if (2 * t + r + s != target.size()) continue;
    for (const auto& rho : special_induction(SpecialInduction::WtrivToS, t).partitions) {
      if (!target.contains(rho)) continue;
      total += lr_multi({rho, column(s), column(r)}, target);
    }
  }
  return total;
}

}  // namespace unip
