#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unip {

// Domain errors. Thrown by library operations; the CLI maps them to exit 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define UNIP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

UNIP_DEFINE_ERROR(IncompatibleSize);
UNIP_DEFINE_ERROR(InvalidOrbit);
UNIP_DEFINE_ERROR(WrongLabel);
UNIP_DEFINE_ERROR(BadSubset);
UNIP_DEFINE_ERROR(BadParityViolation);
UNIP_DEFINE_ERROR(PreconditionViolated);
UNIP_DEFINE_ERROR(SizeMismatch);
UNIP_DEFINE_ERROR(RankMismatch);
UNIP_DEFINE_ERROR(VariantRequired);

#undef UNIP_DEFINE_ERROR

/// Young diagram stored as weakly decreasing positive row lengths.
/// Row/column accessors are 1-based and return 0 beyond the stored range.
class YoungDiagram {
 public:
  YoungDiagram() = default;

  /// Rows must be weakly decreasing; trailing zeros are stripped.
  explicit YoungDiagram(std::vector<int> rows);

  /// Builds a diagram from an arbitrary multiset of nonnegative lengths.
  static YoungDiagram from_multiset(std::vector<int> lengths);

  int r(int i) const {  // i-th row length, 1-based
    return (i >= 1 && i <= static_cast<int>(rows_.size())) ? rows_[i - 1] : 0;
  }
  int c(int i) const;   // i-th column length, 1-based

  int size() const { return total_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_.empty() ? 0 : rows_[0]; }
  bool empty() const { return rows_.empty(); }
  const std::vector<int>& rows() const { return rows_; }

  bool has_box(int i, int j) const { return j >= 1 && j <= r(i); }

  /// Pointwise containment (as box sets).
  bool contains(const YoungDiagram& other) const;

  YoungDiagram transpose() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int total_ = 0;
};

enum class Family { GL, B, C, D };  // B = odd orthogonal, C = symplectic, D = even orthogonal

enum class UnionMode { Rows, Cols };

/// Multiset union of row lengths (Rows) or of column lengths (Cols).
YoungDiagram diagram_union(const YoungDiagram& a, const YoungDiagram& b, UnionMode mode);

inline YoungDiagram union_rows(const YoungDiagram& a, const YoungDiagram& b) {
  return diagram_union(a, b, UnionMode::Rows);
}
inline YoungDiagram union_cols(const YoungDiagram& a, const YoungDiagram& b) {
  return diagram_union(a, b, UnionMode::Cols);
}

/// Classical-orbit row-multiplicity rule. GL: always true. B/D: even rows pair
/// up. C: odd rows pair up.
bool is_valid_orbit(const YoungDiagram& d, Family fam);

/// Largest fam-valid diagram below d in dominance order. Throws
/// IncompatibleSize when |d| has the wrong parity (B odd, C/D even).
YoungDiagram collapse(const YoungDiagram& d, Family fam);

/// Dimension of the nilpotent orbit with diagram d in the classical Lie
/// algebra of the given family, |d| determining its size.
long long orbit_dim(const YoungDiagram& d, Family fam);

/// a dominates b: both same size and partial sums of a >= those of b.
bool dominates(const YoungDiagram& a, const YoungDiagram& b);

/// "5,3,3,1"; empty diagram accepted as "" or "0".
YoungDiagram parse_diagram(std::string_view text);
std::string to_string(const YoungDiagram& d);

/// All partitions of n (n >= 0), descending-lex order.
std::vector<YoungDiagram> partitions_of(int n);
/// All partitions of n with parts <= max_part.
std::vector<YoungDiagram> partitions_of_max(int n, int max_part);

}  // namespace unip
