#pragma once

#include <string>
#include <vector>

#include "unip/labels.hpp"

namespace unip {

/// Vector of half-integers stored as doubled values (exact arithmetic).
struct HalfIntVector {
  std::vector<int> twice;  // weakly decreasing except a possible final sign

  friend bool operator==(const HalfIntVector&, const HalfIntVector&) = default;
};

std::string to_string(const HalfIntVector& v);  // "3/2,1,0"

/// Dominant coordinates of the infinitesimal character attached to the orbit:
/// half the neutral sl2 element, one coordinate per rank of g. For the
/// very-even variant II the last coordinate is negated.
HalfIntVector infinitesimal_character(const OrbitSpec& spec);

enum class BadPartType { I, II };

/// Type I/II of a bad-parity orbit for star in {C, C*, D, D*} (the decorated
/// W'-irrep choice), and of the good part for C̃. The variant argument is the
/// very-even marker of the ambient orbit; Variant::Unique means type I
/// normalization applies.
BadPartType bad_part_type(Label star, const YoungDiagram& d_b, Variant variant);

/// Barbasch-Vogan dual diagram. GL family: transpose. Otherwise the
/// transpose-pad-collapse recipe certified by the structural identity and the
/// dimension identity (see the acceptance suite).
YoungDiagram bv_dual(const OrbitSpec& spec);

}  // namespace unip
