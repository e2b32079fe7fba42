#pragma once

#include <optional>

#include "unip/labels.hpp"

namespace unip {

/// Good parity of an integer k with respect to star and the rank n of g.
/// n only matters for the GL-family labels.
bool good_parity(int k, Label star, int n);

/// The split d = d_b ⊔_r d_g into bad and good rows. bad_half is present
/// exactly when every bad row length occurs an even number of times
/// (d_b = 2·bad_half); it is always present for the non-GL families.
struct ParitySplit {
  YoungDiagram good;
  YoungDiagram bad;
  std::optional<YoungDiagram> bad_half;
  int n_b = 0;  // |bad_half| when present, otherwise 0
  int n_g = 0;  // rank of the good dual factor
};

ParitySplit split_parity(const OrbitSpec& spec);

/// All rows good (star != Ã), or all rows of one parity (star = Ã).
bool analytically_even(const OrbitSpec& spec);

/// G-relevance for the non-GL labels: B/D/C*: p,q >= n_b; C/C̃: always;
/// D*: false exactly for the very even type-II variant.
bool relevance(const GroupForm& group, const OrbitSpec& spec);

}  // namespace unip
