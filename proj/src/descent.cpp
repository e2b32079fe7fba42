#include "unip/descent.hpp"

#include <algorithm>

namespace unip {

namespace {

Painting blank(const YoungDiagram& shape) {
  return Painting(shape, std::vector<Symbol>(shape.size(), Symbol::Dot));
}

bool in_set(const PPSubset& wp, int i) {
  return std::find(wp.begin(), wp.end(), std::make_pair(i, i + 1)) != wp.end();
}

void require_member(const PaintedBipartition& t, Label star, const YoungDiagram& d,
                    const PPSubset& wp) {
  if (star_of(t.gamma) != star) throw PreconditionViolated("gamma does not match the label");
  const CellDiagrams shapes = cell_diagrams(star, d, wp);
  if (!(t.P.shape() == shapes.iota) || !(t.Q.shape() == shapes.jmath))
    throw PreconditionViolated("painted bipartition has the wrong shape for (orbit, wp)");
  if (!validate_pbp(t)) throw PreconditionViolated("invalid painted bipartition");
}

}  // namespace

Label howe_dual(Label star) {
  switch (real_pattern(star)) {
    case Label::B: return Label::Ct;
    case Label::Ct: return Label::B;
    case Label::C: return Label::D;
    case Label::D: return Label::C;
    case Label::Cstar: return Label::Dstar;
    case Label::Dstar: return Label::Cstar;
    default: throw WrongLabel(std::string(label_name(star)));
  }
}

DualDescent dual_descent(Label star, const YoungDiagram& d, const PPSubset& wp) {
  if (!is_pp_subset(star, d, wp)) throw BadSubset("wp is not a set of primitive pairs");
  DualDescent out;
  out.star = howe_dual(star);
  const Label pattern = real_pattern(star);
  if ((pattern == Label::D || pattern == Label::Dstar) && d.empty()) {
    out.d = YoungDiagram({1});
  } else {
    std::vector<int> rows(d.rows().begin() + (d.empty() ? 0 : 1), d.rows().end());
    out.d = YoungDiagram(std::move(rows));
  }
  for (const auto& [i, j] : wp)
    if (i >= 2) out.wp.emplace_back(i - 1, i);
  return out;
}

// ---------------------------------------------------------------------------
// Shape shifting (labels C and C̃).

namespace {

PaintedBipartition shift_up_C(const PaintedBipartition& t, const CellDiagrams& from,
                              const CellDiagrams& to) {
  const int a = from.iota.c(1);  // >= 1
  const int A = to.iota.c(1);    // = c1(jmath_wp) + 1 > a
  PaintedBipartition out;
  out.gamma = t.gamma;
  Painting np = blank(to.iota);
  for (int i = 1; i <= to.iota.num_rows(); ++i)
    for (int j = 1; j <= to.iota.r(i); ++j)
      if (from.iota.has_box(i, j)) np.set(i, j, t.P.at(i, j));
  const Symbol bottom = t.P.at(a, 1);
  if (bottom != Symbol::Dot) {
    if (a >= 2 && t.P.at(a - 1, 1) == Symbol::C) {
      for (int i = a - 1; i <= A - 2; ++i) np.set(i, 1, Symbol::R);
      np.set(A - 1, 1, Symbol::C);
      np.set(A, 1, Symbol::D);
    } else {
      for (int i = a; i <= A - 1; ++i) np.set(i, 1, Symbol::R);
      np.set(A, 1, bottom);
    }
  } else {
    if (from.iota.c(2) == a && t.P.at(a, 2) == Symbol::R) {
      for (int i = a; i <= A - 1; ++i) np.set(i, 1, Symbol::R);
      np.set(a, 2, Symbol::C);
      np.set(A, 1, Symbol::D);
    } else {
      for (int i = a; i <= A - 2; ++i) np.set(i, 1, Symbol::R);
      np.set(A - 1, 1, Symbol::C);
      np.set(A, 1, Symbol::D);
    }
  }
  out.P = std::move(np);
  Painting nq = blank(to.jmath);
  for (int i = 1; i <= to.jmath.num_rows(); ++i)
    for (int j = 1; j <= to.jmath.r(i); ++j) nq.set(i, j, t.Q.at(i, j));
  out.Q = std::move(nq);
  return out;
}

PaintedBipartition shift_down_C(const PaintedBipartition& t, const CellDiagrams& from,
                                const CellDiagrams& to) {
  // `from` carries (1,2), `to` does not.
  const int A = from.iota.c(1);
  const int a = to.iota.c(1);  // = c1(jmath_from) + 1
  const int b = to.jmath.c(1);
  PaintedBipartition out;
  out.gamma = t.gamma;
  Painting np = blank(to.iota);
  for (int i = 1; i <= to.iota.num_rows(); ++i)
    for (int j = 1; j <= to.iota.r(i); ++j)
      if (from.iota.has_box(i, j)) np.set(i, j, t.P.at(i, j));
  Painting nq = blank(to.jmath);
  for (int i = 1; i <= to.jmath.num_rows(); ++i)
    for (int j = 1; j <= to.jmath.r(i); ++j)
      if (from.jmath.has_box(i, j)) nq.set(i, j, t.Q.at(i, j));

  const Symbol probe = t.P.at(A - 1, 1);
  if (probe == Symbol::C) {
    const int c1j = from.jmath.c(1);
    if (c1j >= 1 && t.P.at(c1j, 1) == Symbol::R) {
      np.set(a - 1, 1, Symbol::C);
      np.set(a, 1, Symbol::D);
      for (int i = a; i <= b; ++i) nq.set(i, 1, Symbol::S);
    } else {
      np.set(a, 1, Symbol::Dot);
      nq.set(a, 1, Symbol::Dot);
      for (int i = a + 1; i <= b; ++i) nq.set(i, 1, Symbol::S);
    }
  } else if (probe == Symbol::R) {
    if (from.iota.c(2) == from.jmath.c(1) + 1 && t.P.at(A, 1) == Symbol::D &&
        t.P.at(from.iota.c(2), 2) == Symbol::C) {
      np.set(a, 1, Symbol::Dot);
      np.set(to.iota.c(2), 2, Symbol::R);
      nq.set(a, 1, Symbol::Dot);
      for (int i = a + 1; i <= b; ++i) nq.set(i, 1, Symbol::S);
    } else {
      np.set(a, 1, t.P.at(A, 1));
      for (int i = a; i <= b; ++i) nq.set(i, 1, Symbol::S);
    }
  } else {
    throw PreconditionViolated("unexpected symbol above the first-column bottom");
  }
  out.P = std::move(np);
  out.Q = std::move(nq);
  return out;
}

PaintedBipartition shift_Ct(const PaintedBipartition& t, const CellDiagrams& to) {
  // Same symbol-transfer rule in both directions.
  PaintedBipartition out;
  out.gamma = t.gamma;
  Painting np = blank(to.iota);
  for (int i = 1; i <= to.iota.num_rows(); ++i)
    for (int j = 1; j <= to.iota.r(i); ++j) {
      if (j == 1 && t.Q.shape().has_box(i, 1) && t.Q.at(i, 1) == Symbol::R)
        np.set(i, 1, Symbol::S);
      else if (j == 1 && t.Q.shape().has_box(i, 1) && t.Q.at(i, 1) == Symbol::D)
        np.set(i, 1, Symbol::C);
      else
        np.set(i, j, t.P.at(i, j));
    }
  Painting nq = blank(to.jmath);
  for (int i = 1; i <= to.jmath.num_rows(); ++i)
    for (int j = 1; j <= to.jmath.r(i); ++j) {
      if (j == 1 && t.P.shape().has_box(i, 1) && t.P.at(i, 1) == Symbol::S)
        nq.set(i, 1, Symbol::R);
      else if (j == 1 && t.P.shape().has_box(i, 1) && t.P.at(i, 1) == Symbol::C)
        nq.set(i, 1, Symbol::D);
      else
        nq.set(i, j, t.Q.at(i, j));
    }
  out.P = std::move(np);
  out.Q = std::move(nq);
  return out;
}

}  // namespace

PaintedBipartition shape_shift(const PaintedBipartition& t, const YoungDiagram& d,
                               const PPSubset& wp, ShiftDirection dir) {
  const Label star = star_of(t.gamma);
  if (star != Label::C && star != Label::Ct)
    throw PreconditionViolated("shape shifting applies to labels C and C̃ only");
  if (classify_star_pair(star, d, 1) != PairClass::Primitive)
    throw PreconditionViolated("(1,2) must be primitive");
  const bool has12 = in_set(wp, 1);
  if (dir == ShiftDirection::Up && has12)
    throw PreconditionViolated("(1,2) already in wp");
  if (dir == ShiftDirection::Down && !has12)
    throw PreconditionViolated("(1,2) not in wp");
  require_member(t, star, d, wp);

  PPSubset other = wp;
  if (dir == ShiftDirection::Up)
    other.insert(other.begin(), {1, 2});
  else
    other.erase(other.begin());
  const CellDiagrams from = cell_diagrams(star, d, wp);
  const CellDiagrams to = cell_diagrams(star, d, other);

  PaintedBipartition out;
  if (star == Label::Ct)
    out = shift_Ct(t, to);
  else if (dir == ShiftDirection::Up)
    out = shift_up_C(t, from, to);
  else
    out = shift_down_C(t, from, to);
  if (!validate_pbp(out)) throw PreconditionViolated("shape shift produced an invalid painting");
  return out;
}

// ---------------------------------------------------------------------------
// Naive descent.

PaintedBipartition naive_descent(const PaintedBipartition& t) {
  if (!validate_pbp(t)) throw PreconditionViolated("invalid painted bipartition");
  const Label star = star_of(t.gamma);
  const bool shift_iota =
      star == Label::Ct || star == Label::D || star == Label::Dstar;  // else shift jmath

  Gamma new_gamma;
  if (t.gamma == Gamma::Ct) {
    bool c_in_col1 = false;
    for (int i = 1; i <= t.P.shape().c(1); ++i)
      if (t.P.at(i, 1) == Symbol::C) c_in_col1 = true;
    new_gamma = c_in_col1 ? Gamma::BMinus : Gamma::BPlus;
  } else {
    switch (howe_dual(star)) {
      case Label::Ct: new_gamma = Gamma::Ct; break;
      case Label::C: new_gamma = Gamma::C; break;
      case Label::D: new_gamma = Gamma::D; break;
      case Label::Cstar: new_gamma = Gamma::Cstar; break;
      case Label::Dstar: new_gamma = Gamma::Dstar; break;
      default: throw Error("unreachable");
    }
  }

  const Painting& shifted_src = shift_iota ? t.P : t.Q;
  const Painting& kept_src = shift_iota ? t.Q : t.P;

  // New shape of the shifted side: drop the first column.
  std::vector<int> shifted_rows;
  for (int row : shifted_src.shape().rows())
    if (row > 1) shifted_rows.push_back(row - 1);
  const YoungDiagram shifted_shape(std::move(shifted_rows));

  // Free boxes carry {•, s}; everything else is copied in place.
  const auto free_len = [](const Painting& p, int i) {
    int len = 0;
    while (len < p.shape().r(i) &&
           (p.at(i, len + 1) == Symbol::Dot || p.at(i, len + 1) == Symbol::S))
      ++len;
    return len;
  };

  Painting shifted_out = blank(shifted_shape);
  std::vector<int> shifted_free;
  for (int i = 1; i <= shifted_shape.num_rows(); ++i) {
    const int src_free = free_len(shifted_src, i);
    shifted_free.push_back(std::max(src_free - 1, 0));
    for (int j = 1; j <= shifted_shape.r(i); ++j) {
      const Symbol s = shifted_src.at(i, j + 1);
      if (s != Symbol::Dot && s != Symbol::S) shifted_out.set(i, j, s);
    }
  }
  Painting kept_out = kept_src;
  std::vector<int> kept_free;
  for (int i = 1; i <= kept_src.shape().num_rows(); ++i) kept_free.push_back(free_len(kept_src, i));

  // The shifted side never admits s in the target alphabet, so its free boxes
  // are all •; the kept side paints the matching • set and fills the rest with s.
  const YoungDiagram dots(std::move(shifted_free));
  const YoungDiagram kept_free_d(std::move(kept_free));
  if (!kept_free_d.contains(dots))
    throw PreconditionViolated("no {•,s} completion exists");
  for (int i = 1; i <= shifted_shape.num_rows(); ++i)
    for (int j = 1; j <= dots.r(i); ++j) shifted_out.set(i, j, Symbol::Dot);
  for (int i = 1; i <= kept_src.shape().num_rows(); ++i) {
    for (int j = 1; j <= kept_free_d.r(i); ++j)
      kept_out.set(i, j, j <= dots.r(i) ? Symbol::Dot : Symbol::S);
  }

  PaintedBipartition out;
  out.gamma = new_gamma;
  out.P = shift_iota ? shifted_out : kept_out;
  out.Q = shift_iota ? kept_out : shifted_out;
  if (!validate_pbp(out))
    throw PreconditionViolated("naive descent produced an invalid painting");
  return out;
}

// ---------------------------------------------------------------------------
// Descent.

PaintedBipartition descend(const PaintedBipartition& t, const YoungDiagram& d,
                           const PPSubset& wp) {
  const Label star = star_of(t.gamma);
  require_member(t, star, d, wp);
  const CellDiagrams shapes = cell_diagrams(star, d, wp);
  const DualDescent child = dual_descent(star, d, wp);

  PaintedBipartition out;
  switch (real_pattern(star)) {
    case Label::B: {
      out = naive_descent(t);
      const int c1i = shapes.iota.c(1);
      if (t.gamma == Gamma::BPlus && !in_set(wp, 2) && d.r(2) > 0 && c1i >= 1 &&
          (t.Q.at(c1i, 1) == Symbol::R || t.Q.at(c1i, 1) == Symbol::D)) {
        out.P.set(out.P.shape().c(1), 1, Symbol::S);
      } else if (t.gamma == Gamma::BPlus && in_set(wp, 2) && shapes.jmath.c(2) >= 1 &&
                 (t.Q.at(shapes.jmath.c(2), 1) == Symbol::R ||
                  t.Q.at(shapes.jmath.c(2), 1) == Symbol::D)) {
        out.Q.set(out.Q.shape().c(1), 1, Symbol::R);
      }
      break;
    }
    case Label::D: {
      out = naive_descent(t);
      const int c1i = shapes.iota.c(1);
      const int c2i = shapes.iota.c(2);
      bool branch_a = d.r(2) == d.r(3) && d.r(3) > 0 && c2i >= 1 &&
                      t.P.at(c2i, 2) == Symbol::C;
      if (branch_a)
        for (int i = c2i; i <= c1i; ++i)
          branch_a = branch_a && (t.P.at(i, 1) == Symbol::R || t.P.at(i, 1) == Symbol::D);
      if (branch_a) {
        out.P.set(out.P.shape().c(1), 1, Symbol::R);
      } else if (in_set(wp, 2) && c2i >= 2 &&
                 (t.P.at(c2i - 1, 1) == Symbol::R || t.P.at(c2i - 1, 1) == Symbol::C)) {
        const Symbol carried = t.P.at(c2i - 1, 1);
        out.P.set(out.P.shape().c(1) - 1, 1, Symbol::R);
        out.P.set(out.P.shape().c(1), 1, carried);
      }
      break;
    }
    case Label::C:
    case Label::Ct:
    case Label::Cstar:
    case Label::Dstar: {
      if (in_set(wp, 1)) {
        if (star == Label::Cstar || star == Label::Dstar)
          throw PreconditionViolated("quaternionic labels admit only wp = {}");
        out = naive_descent(shape_shift(t, d, wp, ShiftDirection::Down));
      } else {
        out = naive_descent(t);
      }
      break;
    }
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
  require_member(out, child.star, child.d, child.wp);
  return out;
}

// ---------------------------------------------------------------------------
// Tails and double descent.

namespace {

PaintedBipartition column_pbp(const std::vector<Symbol>& sorted, Gamma gamma, bool on_iota) {
  const int k = static_cast<int>(sorted.size());
  const YoungDiagram column = k == 0 ? YoungDiagram() : YoungDiagram(std::vector<int>(k, 1));
  Painting painted(column, sorted);
  PaintedBipartition out;
  out.gamma = gamma;
  if (on_iota) {
    out.P = std::move(painted);
    out.Q = Painting();
  } else {
    out.P = Painting();
    out.Q = std::move(painted);
  }
  return out;
}

}  // namespace

Tail tail(const PaintedBipartition& t, const YoungDiagram& d) {
  const Label star = star_of(t.gamma);
  if (star != Label::B && star != Label::D && star != Label::Cstar)
    throw WrongLabel("tails exist for labels B, D, C*");
  if (!validate_pbp(t)) throw PreconditionViolated("invalid painted bipartition");

  // The division row between the body and the tail is fixed by the row
  // lengths (it equals the shape-based index of the wp = {} case).
  std::vector<Symbol> bag;
  int k = 0;
  if (star == Label::B) {
    k = (d.r(1) - d.r(2)) / 2 + 1;
    const int top = d.r(2) / 2;
    const int c1j = t.Q.shape().c(1);  // = r_1/2
    for (int j = top + 1; j <= c1j; ++j) bag.push_back(t.Q.at(j, 1));
    const bool blank_top =
        top == 0 || t.Q.at(top, 1) == Symbol::Dot || t.Q.at(top, 1) == Symbol::S;
    if (t.gamma == Gamma::BPlus && blank_top)
      bag.push_back(Symbol::C);
    else if (t.gamma == Gamma::BMinus && blank_top)
      bag.push_back(Symbol::S);
    else
      bag.push_back(t.Q.at(top, 1));
  } else if (star == Label::D) {
    k = (d.r(1) - d.r(2)) / 2 + 1;
    const int top = (d.r(2) + 1) / 2;
    const int c1i = t.P.shape().c(1);  // = (r_1+1)/2
    for (int j = top + 1; j <= c1i; ++j) bag.push_back(t.P.at(j, 1));
    if (d.empty()) {
      bag.push_back(Symbol::D);
    } else {
      bool special = d.r(2) == d.r(3) && d.r(3) > 0 && t.P.shape().has_box(top, 2) &&
                     t.P.at(top, 1) == Symbol::R && t.P.at(top, 2) == Symbol::C;
      for (int j = top + 1; special && j <= c1i; ++j)
        special = t.P.at(j, 1) == Symbol::R || t.P.at(j, 1) == Symbol::D;
      bag.push_back(special ? Symbol::C : t.P.at(top, 1));
    }
  } else {  // C*
    k = (d.r(1) - d.r(2) - 1) / 2;
    const int top = (d.r(2) + 1) / 2;
    const int c1j = t.Q.shape().c(1);  // = (r_1-1)/2
    for (int j = top + 1; j <= c1j; ++j) bag.push_back(t.Q.at(j, 1));
  }
  if (static_cast<int>(bag.size()) != k)
    throw PreconditionViolated("tail multiset has the wrong size");
  std::sort(bag.begin(), bag.end());

  Tail result;
  if (star == Label::Cstar) {
    result.orbit = YoungDiagram({2 * k + 1});
    result.tau = column_pbp(bag, Gamma::Cstar, /*on_iota=*/false);
    result.x = bag.empty() ? Symbol::Dot : bag.back();
    result.eps = 1;
  } else {
    result.orbit = YoungDiagram(std::vector<int>{2 * k - 1, 1});
    result.tau = column_pbp(bag, Gamma::D, /*on_iota=*/true);
    result.x = bag.back();
    result.eps = result.x == Symbol::D ? 0 : 1;
  }
  if (!validate_pbp(result.tau))
    throw PreconditionViolated("tail multiset does not form a valid column");
  return result;
}

DoubleDescent double_descent(const PaintedBipartition& t, const YoungDiagram& d,
                             const PPSubset& wp) {
  const Label star = star_of(t.gamma);
  if (star != Label::B && star != Label::D && star != Label::Cstar)
    throw WrongLabel("double descent exists for labels B, D, C*");
  if (star == Label::D && d.empty())
    throw PreconditionViolated("double descent undefined for the empty D orbit");
  if (star != Label::Cstar && d.r(2) == 0)
    throw PreconditionViolated("single-block base orbits are handled by the base formulas");
  DoubleDescent out;
  out.tail = tail(t, d);
  const DualDescent c1 = dual_descent(star, d, wp);
  const PaintedBipartition mid = descend(t, d, wp);
  out.core = descend(mid, c1.d, c1.wp);
  return out;
}

}  // namespace unip
