#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unip/duality.hpp"
#include "unip/labels.hpp"
#include "unip/wirrep.hpp"

namespace unip {

enum class PairClass { NotStarPair, Vacant, Balanced, Tailed, Primitive };

/// Set of primitive star-pairs (i, i+1), kept sorted by i.
using PPSubset = std::vector<std::pair<int, int>>;

/// Classification of the pair (i, i+1) in d. Star-pairs have i odd for the
/// C-side labels and i even for the B/D-side labels.
PairClass classify_star_pair(Label star, const YoungDiagram& d, int i);

PPSubset primitive_pairs(Label star, const YoungDiagram& d);

/// True when wp is a subset of primitive_pairs(star, d).
bool is_pp_subset(Label star, const YoungDiagram& d, const PPSubset& wp);

struct CellDiagrams {
  YoungDiagram iota, jmath;
  friend bool operator==(const CellDiagrams&, const CellDiagrams&) = default;
};

/// The pair (ι_℘, ȷ_℘) attached to a good-parity orbit and ℘ ⊆ PP.
CellDiagrams cell_diagrams(Label star, const YoungDiagram& d, const PPSubset& wp);

/// The W_{n_b}- or W'_{n_b}-irrep τ_b attached to the bad part. For the B-side
/// labels the decoration is None; for the C/D-side labels it is I/II.
struct TauBad {
  Bipartition pair;
  Decoration dec = Decoration::None;
  friend bool operator==(const TauBad&, const TauBad&) = default;
};

TauBad tau_bad(Label star, const YoungDiagram& d_b, Variant variant);

/// One Lusztig left cell member τ_b ⊗ τ_℘̄.
struct LeftCellElement {
  TauBad bad;
  CellDiagrams good;          // (ι_℘, ȷ_℘)
  Decoration good_dec = Decoration::None;
  PPSubset wp;                // representative of ℘̄
};

/// The full left cell {τ_b ⊗ τ_℘̄ : ℘̄ ∈ Ā(Ǒ)} for a valid orbit of a
/// B/C/D-side label. For C̃ the ℘ ↔ ℘ᶜ identification is applied.
std::vector<LeftCellElement> lusztig_left_cell(Label star, const YoungDiagram& d,
                                               Variant variant);

/// Subsets of PP(star, d_good), canonical order; for C̃ one representative per
/// class of the ℘ ↔ ℘ᶜ identification.
std::vector<PPSubset> pp_subsets(Label star, const YoungDiagram& d_good);
std::vector<PPSubset> pp_subsets_reduced(Label star, const YoungDiagram& d_good);

}  // namespace unip
