#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unip/diagram.hpp"

namespace unip {

/// Painting symbols in their nesting order: the boxes carrying a prefix
/// {•}, {•,s}, {•,s,r}, {•,s,r,c} must each form a Young diagram.
enum class Symbol : std::uint8_t { Dot = 0, S, R, C, D };

char symbol_char(Symbol s);

/// Total assignment of symbols to the boxes of a diagram (row-major storage).
class Painting {
 public:
  Painting() = default;
  Painting(YoungDiagram shape, std::vector<Symbol> cells);

  const YoungDiagram& shape() const { return shape_; }
  Symbol at(int i, int j) const;          // 1-based box (row, column)
  void set(int i, int j, Symbol s);
  int count(Symbol s) const;
  bool empty() const { return shape_.empty(); }

  /// Boxes with the given symbol, as (i, j) pairs in row-major order.
  std::vector<std::pair<int, int>> boxes_with(Symbol s) const;

  friend bool operator==(const Painting&, const Painting&) = default;
  friend auto operator<=>(const Painting&, const Painting&) = default;

 private:
  YoungDiagram shape_;
  std::vector<Symbol> cells_;
  std::vector<int> offsets_;
};

/// Nesting plus the one-s/r-per-row and one-c/d-per-column caps.
bool is_valid_painting(const Painting& p);

std::string to_string(const Painting& p);        // rows joined by '/', '*' for •
Painting parse_painting(std::string_view text);  // shape inferred; "" is empty

/// The subdiagram of boxes painted •.
YoungDiagram dot_diagram(const Painting& p);

/// Layer constraints between consecutive prefix diagrams.
enum class StripKind { Any, Vertical, Horizontal };

StripKind strip_kind(Symbol s);  // S,R vertical; C,D horizontal; Dot any

/// All mu with from ⊆ mu ⊆ to such that mu/from satisfies the strip kind,
/// in descending lexicographic order of row vectors.
std::vector<YoungDiagram> layer_extensions(const YoungDiagram& from, const YoungDiagram& to,
                                           StripKind kind);

/// All paintings of `shape` over the ordered `alphabet` (a rank-ordered subset
/// of the five symbols) whose •-subdiagram equals `dots` (pass the empty
/// diagram and omit Dot from the alphabet for dot-free paintings). Canonical
/// order: earlier symbols fill greedily first.
std::vector<Painting> paintings_with_dots(const YoungDiagram& shape, const YoungDiagram& dots,
                                          std::span<const Symbol> alphabet);

/// All paintings of `shape` over the ordered alphabet (Dot included or not),
/// canonical order: •-subdiagram descending, then the remaining layers.
std::vector<Painting> all_paintings(const YoungDiagram& shape, std::span<const Symbol> alphabet);

}  // namespace unip
