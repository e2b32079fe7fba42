#include "unip/cells.hpp"

#include <algorithm>
#include <sstream>

#include "unip/parity.hpp"

namespace unip {

std::string to_string(const Bipartition& b) {
  std::string out = b.left.empty() ? "" : to_string(b.left);
  out += '|';
  if (!b.right.empty()) out += to_string(b.right);
  return out;
}

WPrimeIrrep WPrimeIrrep::make(YoungDiagram a, YoungDiagram b, Decoration dec) {
  WPrimeIrrep w;
  if (a == b) {
    if (dec == Decoration::None) throw Error("equal halves need a I/II decoration");
    w.dec = dec;
  } else {
    w.dec = Decoration::None;
  }
  if (b < a) std::swap(a, b);
  w.pair = Bipartition{std::move(a), std::move(b)};
  return w;
}

std::string to_string(const WPrimeIrrep& w) {
  std::string out = to_string(w.pair);
  if (w.dec == Decoration::I) out += "_I";
  if (w.dec == Decoration::II) out += "_II";
  return out;
}

namespace {

bool star_pair_parity_odd(Label star) {
  switch (real_pattern(star)) {
    case Label::C:
    case Label::Ct:
    case Label::Cstar:
      return true;
    case Label::B:
    case Label::D:
    case Label::Dstar:
      return false;
    default:
      throw WrongLabel("star-pairs exist for the B/C/D labels only");
  }
}

void require_good_parity(Label star, const YoungDiagram& d) {
  for (int row : d.rows())
    if (!good_parity(row, star, 0))
      throw PreconditionViolated("diagram " + to_string(d) + " is not of good parity for " +
                                 std::string(label_name(star)));
}

// Builds a diagram out of prescribed column lengths (weakly decreasing).
YoungDiagram from_columns(std::vector<int> cols) {
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  for (size_t i = 0; i + 1 < cols.size(); ++i)
    if (cols[i] < cols[i + 1]) throw BadSubset("column lengths not weakly decreasing");
  return YoungDiagram(std::move(cols)).transpose();
}

}  // namespace

PairClass classify_star_pair(Label star, const YoungDiagram& d, int i) {
  if (i < 1) return PairClass::NotStarPair;
  const bool want_odd = star_pair_parity_odd(star);
  if ((i % 2 == 1) != want_odd) return PairClass::NotStarPair;
  const int a = d.r(i), b = d.r(i + 1);
  if (a == 0 && b == 0) return PairClass::Vacant;
  if (a == b) return PairClass::Balanced;
  if ((a - b) % 2 != 0) return PairClass::Tailed;
  return PairClass::Primitive;
}

PPSubset primitive_pairs(Label star, const YoungDiagram& d) {
  require_good_parity(star, d);
  PPSubset pp;
  const int first = star_pair_parity_odd(star) ? 1 : 2;
  for (int i = first; i <= d.num_rows(); i += 2)
    if (classify_star_pair(star, d, i) == PairClass::Primitive) pp.emplace_back(i, i + 1);
  return pp;
}

bool is_pp_subset(Label star, const YoungDiagram& d, const PPSubset& wp) {
  const PPSubset pp = primitive_pairs(star, d);
  for (const auto& pair : wp)
    if (std::find(pp.begin(), pp.end(), pair) == pp.end()) return false;
  return true;
}

CellDiagrams cell_diagrams(Label star, const YoungDiagram& d, const PPSubset& wp) {
  require_good_parity(star, d);
  if (!is_pp_subset(star, d, wp)) throw BadSubset("wp is not a set of primitive pairs");
  const auto in_wp = [&wp](int i) {
    return std::find(wp.begin(), wp.end(), std::make_pair(i, i + 1)) != wp.end();
  };
  std::vector<int> ci, cj;
  const int rows = d.num_rows();
  switch (real_pattern(star)) {
    case Label::B: {
      cj.push_back(d.r(1) / 2);
      for (int i = 1; 2 * i <= rows; ++i) {
        if (in_wp(2 * i)) {
          ci.push_back(d.r(2 * i + 1) / 2);
          cj.push_back(d.r(2 * i) / 2);
        } else {
          ci.push_back(d.r(2 * i) / 2);
          cj.push_back(d.r(2 * i + 1) / 2);
        }
      }
      break;
    }
    case Label::Ct: {
      for (int i = 1; 2 * i - 1 <= rows; ++i) {
        if (in_wp(2 * i - 1)) {
          ci.push_back(d.r(2 * i) / 2);
          cj.push_back(d.r(2 * i - 1) / 2);
        } else {
          ci.push_back(d.r(2 * i - 1) / 2);
          cj.push_back(d.r(2 * i) / 2);
        }
      }
      break;
    }
    case Label::C:
    case Label::Cstar: {
      for (int i = 1; 2 * i - 1 <= rows; ++i) {
        const PairClass cls = classify_star_pair(star, d, 2 * i - 1);
        if (in_wp(2 * i - 1)) {
          cj.push_back((d.r(2 * i) - 1) / 2);
          ci.push_back((d.r(2 * i - 1) + 1) / 2);
        } else if (cls == PairClass::Vacant) {
          cj.push_back(0);
          ci.push_back(0);
        } else if (cls == PairClass::Tailed) {
          cj.push_back((d.r(2 * i - 1) - 1) / 2);
          ci.push_back(0);
        } else {
          cj.push_back((d.r(2 * i - 1) - 1) / 2);
          ci.push_back((d.r(2 * i) + 1) / 2);
        }
      }
      break;
    }
    case Label::D:
    case Label::Dstar: {
      ci.push_back(d.r(1) > 0 ? (d.r(1) + 1) / 2 : 0);
      for (int i = 1; 2 * i <= rows; ++i) {
        const PairClass cls = classify_star_pair(star, d, 2 * i);
        if (in_wp(2 * i)) {
          cj.push_back((d.r(2 * i + 1) - 1) / 2);
          ci.push_back((d.r(2 * i) + 1) / 2);
        } else if (cls == PairClass::Vacant) {
          cj.push_back(0);
          ci.push_back(0);
        } else if (cls == PairClass::Tailed) {
          cj.push_back((d.r(2 * i) - 1) / 2);
          ci.push_back(0);
        } else {
          cj.push_back((d.r(2 * i) - 1) / 2);
          ci.push_back((d.r(2 * i + 1) + 1) / 2);
        }
      }
      break;
    }
    default:
      throw WrongLabel("cell diagrams exist for the B/C/D labels only");
  }
  return CellDiagrams{from_columns(std::move(ci)), from_columns(std::move(cj))};
}

TauBad tau_bad(Label star, const YoungDiagram& d_b, Variant variant) {
  const Label pattern = real_pattern(star);
  const auto& rows = d_b.rows();
  for (size_t i = 0; i < rows.size();) {
    size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if ((j - i) % 2 != 0)
      throw BadParityViolation("bad part rows must have even multiplicities");
    i = j;
  }
  for (int row : rows)
    if (good_parity(row, star, 0))
      throw BadParityViolation("row of good parity in the bad part");
  std::vector<int> half;
  for (size_t i = 0; i < rows.size(); i += 2) half.push_back(rows[i]);

  std::vector<int> left_cols, right_cols;
  TauBad tau;
  switch (pattern) {
    case Label::B:
    case Label::Ct:
      for (int r : half) {
        left_cols.push_back((r + 1) / 2);
        right_cols.push_back((r - 1) / 2);
      }
      tau.dec = Decoration::None;
      break;
    case Label::C:
    case Label::Cstar:
    case Label::D:
    case Label::Dstar:
      for (int r : half) {
        left_cols.push_back(r / 2);
        right_cols.push_back(r / 2);
      }
      tau.dec = bad_part_type(star, d_b, variant) == BadPartType::I ? Decoration::I
                                                                    : Decoration::II;
      break;
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
  tau.pair = Bipartition{from_columns(std::move(left_cols)), from_columns(std::move(right_cols))};
  return tau;
}

std::vector<PPSubset> pp_subsets(Label star, const YoungDiagram& d_good) {
  const PPSubset pp = primitive_pairs(star, d_good);
  std::vector<PPSubset> out;
  const size_t count = size_t{1} << pp.size();
  for (size_t mask = 0; mask < count; ++mask) {
    PPSubset subset;
    for (size_t b = 0; b < pp.size(); ++b)
      if (mask & (size_t{1} << b)) subset.push_back(pp[b]);
    out.push_back(std::move(subset));
  }
  return out;
}

std::vector<PPSubset> pp_subsets_reduced(Label star, const YoungDiagram& d_good) {
  std::vector<PPSubset> all = pp_subsets(star, d_good);
  if (real_pattern(star) != Label::Ct) return all;
  const PPSubset pp = primitive_pairs(star, d_good);
  std::vector<PPSubset> out;
  for (const auto& wp : all) {
    PPSubset complement;
    for (const auto& pair : pp)
      if (std::find(wp.begin(), wp.end(), pair) == wp.end()) complement.push_back(pair);
    if (wp <= complement) out.push_back(wp);
  }
  return out;
}

std::vector<LeftCellElement> lusztig_left_cell(Label star, const YoungDiagram& d,
                                               Variant variant) {
  OrbitSpec spec{star, d, variant};
  const ParitySplit split = split_parity(spec);
  if (!split.bad_half) throw BadParityViolation("orbit has odd bad-row multiplicities");
  const TauBad bad = tau_bad(star, split.bad, variant);

  Decoration good_dec = Decoration::None;
  if (real_pattern(star) == Label::Ct)
    good_dec = bad_part_type(Label::Ct, split.good, Variant::Unique) == BadPartType::I
                   ? Decoration::I
                   : Decoration::II;

  std::vector<LeftCellElement> cell;
  for (const auto& wp : pp_subsets_reduced(star, split.good)) {
    LeftCellElement el;
    el.bad = bad;
    el.good = cell_diagrams(star, split.good, wp);
    el.good_dec = good_dec;
    el.wp = wp;
    cell.push_back(std::move(el));
  }
  return cell;
}

}  // namespace unip
