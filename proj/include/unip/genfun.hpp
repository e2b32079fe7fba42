#pragma once

#include <optional>

#include "unip/cells.hpp"
#include "unip/poly.hpp"

namespace unip {

/// Tail buckets: the last-box symbol of the tail is d, lies in {c, r}, or is s.
enum class Bucket { D, CR, S };

enum class BaseKind { BRow, DHook, H };

/// The closed-form base generating functions: f_{B,[2k],∅}^S, f_{D,[2k-1,1],∅}^S
/// (with the k = 0 sentinel 1/0/0), and the correction series h_k^S.
BivariatePoly base_gf(BaseKind kind, int k, Bucket bucket);

/// Signature-graded generating function of PBP_*(Ǒ, ℘). Full bivariate data
/// for labels B, D, C* (optionally restricted to one tail bucket for B/D);
/// a constant polynomial carrying the cardinality for C, C̃, D*.
BivariatePoly gf(Label star, const YoungDiagram& d, const PPSubset& wp,
                 std::optional<Bucket> bucket = std::nullopt);

/// Coefficient extraction at the group's signature (B, D, C*), or the full
/// count (C, C̃, D*).
long long count_via_gf(Label star, const GroupForm& group, const YoungDiagram& d,
                       const PPSubset& wp);

}  // namespace unip
