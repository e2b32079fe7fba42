#pragma once

#include <tuple>

#include "unip/pbp.hpp"

namespace unip {

/// Howe dual label: B↔C̃, C↔D, C*↔D*.
Label howe_dual(Label star);

/// Dual descent of an orbit: remove the first row, except that the empty
/// D/D*-orbit descends to the single-box diagram.
struct DualDescent {
  Label star;
  YoungDiagram d;
  PPSubset wp;
};

DualDescent dual_descent(Label star, const YoungDiagram& d, const PPSubset& wp);

enum class ShiftDirection { Up, Down };

/// Shape shifting T for star in {C, C̃} with (1,2) primitive: Up moves
/// ℘ ↦ ℘ ∪ {(1,2)}, Down is its inverse.
PaintedBipartition shape_shift(const PaintedBipartition& t, const YoungDiagram& d,
                               const PPSubset& wp, ShiftDirection dir);

/// Naive descent: removes the first column of ȷ (labels B, C, C*) or of ι
/// (labels C̃, D, D*), carries the non-{•,s} symbols and re-solves the unique
/// {•,s} filling.
PaintedBipartition naive_descent(const PaintedBipartition& t);

/// Full descent map PBP(Ǒ, ℘) → PBP(∇̌Ǒ, ∇̌℘).
PaintedBipartition descend(const PaintedBipartition& t, const YoungDiagram& d,
                           const PPSubset& wp);

/// Tail of a painted bipartition for star in {B, D, C*}: the single-column
/// painted bipartition over Ǒ_t plus the last-box symbol and the epsilon bit.
struct Tail {
  PaintedBipartition tau;
  YoungDiagram orbit;   // Ǒ_t
  Symbol x = Symbol::D;  // last-box symbol (meaningless for C*, kept as bottom)
  int eps = 1;
};

Tail tail(const PaintedBipartition& t, const YoungDiagram& d);

/// Double descent τ ↦ (∇²(τ), τ_t) for star in {B, D, C*}.
struct DoubleDescent {
  PaintedBipartition core;  // ∇²(τ) over ∇̌²(Ǒ)
  Tail tail;
};

DoubleDescent double_descent(const PaintedBipartition& t, const YoungDiagram& d,
                             const PPSubset& wp);

}  // namespace unip
