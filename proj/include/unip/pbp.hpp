#pragma once

#include <span>
#include <string>
#include <vector>

#include "unip/cells.hpp"
#include "unip/labels.hpp"
#include "unip/painting.hpp"

namespace unip {

/// Type tag of a painted bipartition; B splits into B+ and B-.
enum class Gamma { BPlus, BMinus, C, D, Ct, Cstar, Dstar };

Label star_of(Gamma gamma);
std::string_view gamma_name(Gamma gamma);  // "B+", "B-", "C", "D", "Ct", "Cstar", "Dstar"
Gamma parse_gamma(std::string_view text);

/// Symbol alphabets of Definition-level painted bipartitions.
std::span<const Symbol> p_alphabet(Gamma gamma);
std::span<const Symbol> q_alphabet(Gamma gamma);

struct PaintedBipartition {
  Painting P, Q;
  Gamma gamma = Gamma::C;

  int total() const { return P.shape().size() + Q.shape().size(); }  // |τ|
  friend bool operator==(const PaintedBipartition&, const PaintedBipartition&) = default;
  friend auto operator<=>(const PaintedBipartition&, const PaintedBipartition&) = default;
};

std::string to_string(const PaintedBipartition& t);        // "P|Q|gamma"
PaintedBipartition parse_pbp(std::string_view text);

/// Paintings valid, symbols within the gamma alphabets, identical •-box sets.
bool validate_pbp(const PaintedBipartition& t);

struct Signature {
  int p = 0, q = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// (p_τ, q_τ): symbol counts for the B/D/C* labels, (|τ|, |τ|) otherwise.
Signature pbp_signature(const PaintedBipartition& t);

GroupForm group_of(const PaintedBipartition& t);

/// Paintings of type A^R/A^H/A/Ã on transpose(d), the counting parameters of
/// the general linear and unitary families. Canonical order.
std::vector<Painting> enumerate_pap(Label star, const YoungDiagram& d);

/// Signature of a type A/Ã painting: (#•/2 + #r, #•/2 + #s).
Signature pap_signature(const Painting& p);

/// All painted bipartitions of shape (ι_℘, ȷ_℘) with ⋆_τ = star; for B both
/// B+ and B-. Canonical order: gamma, then •-diagram descending, then layers.
std::vector<PaintedBipartition> enumerate_pbp(Label star, const YoungDiagram& d_good,
                                              const PPSubset& wp);

/// The bad-parity sets PBP*(Ǒ_b): pairs of paintings on (τ_{L,b}, τ_{R,b}).
std::vector<std::pair<Painting, Painting>> enumerate_pbp_bad(Label star,
                                                             const YoungDiagram& d_b);

}  // namespace unip
