#pragma once

#include <map>
#include <vector>

#include "unip/cells.hpp"
#include "unip/labels.hpp"
#include "unip/wirrep.hpp"

namespace unip {

/// Littlewood-Richardson coefficient c^{target}_{a,b}. Throws SizeMismatch
/// unless |a| + |b| = |target|.
long long lr_coeff(const YoungDiagram& a, const YoungDiagram& b, const YoungDiagram& target);

/// Multiplicity of `target` in the product a_1 * a_2 * ... (iterated LR).
long long lr_multi(const std::vector<YoungDiagram>& factors, const YoungDiagram& target);

/// Finitely supported virtual representation with nonnegative multiplicities.
using VirtualRep = std::map<Bipartition, long long>;
using SymVirtualRep = std::map<YoungDiagram, long long>;

/// Induction of W_a x W_b irreps to W_{a+b}: LR on each slot.
VirtualRep induct_bipartitions(const Bipartition& x, const Bipartition& y);

enum class SpecialInduction {
  HetaToW,    // Ind_{H_t}^{W_{2t}} eta  = sum (sigma, sigma)
  HetaToWp,   // Ind_{H_t}^{W'_{2t}} eta = sum (sigma, sigma)_I
  SsgnToW,    // Ind_{S_t}^{W_t} sgn     = sum ([1^s], [1^r])
  StrivToW,   // Ind_{S_t}^{W_t} 1       = sum ([c], [d])
  WepsToS,    // Ind_{W_t}^{S_{2t}} eps  = sum over even-column partitions
  WtrivToS,   // Ind_{W_t}^{S_{2t}} 1    = sum over even-row partitions
};

/// The closed-form multiplicity-free decompositions. HetaToWp lists the
/// decorated constituents through `wprime`; the others fill `bipartitions`
/// (W_n-valued kinds) or `partitions` (S_{2t}-valued kinds).
struct SpecialInductionResult {
  std::vector<Bipartition> bipartitions;
  std::vector<WPrimeIrrep> wprime;
  std::vector<YoungDiagram> partitions;
};

SpecialInductionResult special_induction(SpecialInduction kind, int t);

/// Fake degree a(σ): S_n partition: n(λ); W_n bipartition: 2n(λ)+2n(μ)+|μ|;
/// W'_n pair: 2n(λ)+2n(μ)+min(|λ|,|μ|).
long long a_invariant(const YoungDiagram& partition);
long long a_invariant(const Bipartition& b);
long long a_invariant(const WPrimeIrrep& w);

/// Restriction from W_n to W'_n.
std::vector<WPrimeIrrep> restrict_to_wprime(const Bipartition& x);

/// Multiplicity of the bad factor τ_b in the coherent continuation
/// representation of G_b, per the closed branching formulas.
long long coh_multiplicity_bad(Label star, const TauBad& tau_b, int n_b);

/// Multiplicity of the good factor τ̃_℘ = (ι_℘, ȷ_℘) in the coherent
/// continuation representation of G_g (computed at the level of W_{n_g}).
long long coh_multiplicity_good(Label star, const GroupForm& group_good,
                                const Bipartition& target);

/// Multiplicity of one left-cell element τ_b ⊗ τ_℘̄ in Coh_Λ(K'(G)).
long long coh_multiplicity(Label star, const GroupForm& group, const OrbitSpec& spec,
                           const LeftCellElement& element);

/// Σ over the left cell, the quantity compared against
/// ♯PBP*(Ǒ_b) · ♯PBP~_{G_g}(Ǒ_g) by the oracle acceptance test.
long long coh_left_cell_sum(const GroupForm& group, const OrbitSpec& spec);

/// GL-family coherent multiplicity of an S_n irrep (labels A^R, A^H):
/// the product over the bad/good factors of [Ǒ_*^t : C_{n_*}].
long long coh_multiplicity_gl(Label star, const OrbitSpec& spec);

/// Unitary-family (label A) coherent multiplicity of the good-part cell
/// member at signature (p_g, q_g).
long long coh_multiplicity_unitary(const YoungDiagram& d_good, int p_g, int q_g);

}  // namespace unip
