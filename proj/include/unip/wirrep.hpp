#pragma once

#include <compare>
#include <string>

#include "unip/diagram.hpp"

namespace unip {

/// Irreducible representation of the hyperoctahedral group W_n as an ordered
/// pair of partitions with |left| + |right| = n. Convention: trivial =
/// ([n], 0), sign = (0, [1^n]), eps = (0, [n]), inflated S_n-sign = ([1^n], 0).
struct Bipartition {
  YoungDiagram left, right;

  int rank() const { return left.size() + right.size(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

std::string to_string(const Bipartition& b);  // "2,1|1"

enum class Decoration { None, I, II };

/// Irreducible representation of W'_n (type D Weyl group): an unordered pair
/// of partitions, decorated with I/II exactly when the two halves coincide.
struct WPrimeIrrep {
  Bipartition pair;          // canonical order: left <= right lexicographically
  Decoration dec = Decoration::None;

  static WPrimeIrrep make(YoungDiagram a, YoungDiagram b, Decoration dec);
  int rank() const { return pair.rank(); }
  friend bool operator==(const WPrimeIrrep&, const WPrimeIrrep&) = default;
  friend auto operator<=>(const WPrimeIrrep&, const WPrimeIrrep&) = default;
};

std::string to_string(const WPrimeIrrep& w);

}  // namespace unip
