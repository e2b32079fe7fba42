#include "unip/genfun.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "unip/descent.hpp"
#include "unip/parity.hpp"

namespace unip {

namespace {

BivariatePoly pq_power(int e) { return BivariatePoly::monomial(e, e); }

const BivariatePoly& zero_poly() {
  static const BivariatePoly zero;
  return zero;
}

}  // namespace

BivariatePoly base_gf(BaseKind kind, int k, Bucket bucket) {
  using P = BivariatePoly;
  switch (kind) {
    case BaseKind::BRow:
      switch (bucket) {
        case Bucket::D: return (P::monomial(2, 1) + P::monomial(1, 2)) * nu(k - 1);
        case Bucket::CR: return P::monomial(1, 0) * nu(k) + P::monomial(2, 1) * nu(k - 1);
        case Bucket::S: return P::monomial(0, 2 * k + 1);
      }
      break;
    case BaseKind::DHook:
      if (k == 0) return bucket == Bucket::D ? P::constant(1) : P();
      switch (bucket) {
        case Bucket::D: return P::monomial(1, 1) * nu(k - 1) + P::monomial(2, 2) * nu(k - 2);
        case Bucket::CR: return (P::monomial(2, 0) + P::monomial(1, 1)) * nu(k - 1);
        case Bucket::S: return P::monomial(0, 2 * k);
      }
      break;
    case BaseKind::H:
      switch (bucket) {
        case Bucket::D: return (P::monomial(2, 2) + P::monomial(1, 3)) * nu(k - 2);
        case Bucket::CR: return P::monomial(1, 1) * nu(k - 1) + P::monomial(2, 2) * nu(k - 2);
        case Bucket::S: return P::monomial(0, 2 * k);
      }
      break;
  }
  throw Error("unreachable");
}

namespace {

struct GfEngine {
  std::map<std::string, BivariatePoly> memo;

  static std::string key(Label star, const YoungDiagram& d, const PPSubset& wp, int bucket) {
    std::ostringstream out;
    out << label_name(star) << '/' << to_string(d) << '/';
    for (const auto& [i, j] : wp) out << i << ';';
    out << '/' << bucket;
    return out.str();
  }

  // Bucketed series for labels B and D. bucket < 0 means the full sum.
  BivariatePoly bucketed(Label star, const YoungDiagram& d, const PPSubset& wp, int bucket) {
    if (bucket < 0) {
      BivariatePoly total;
      for (Bucket b : {Bucket::D, Bucket::CR, Bucket::S})
        total += bucketed(star, d, wp, static_cast<int>(b));
      return total;
    }
    const std::string k = key(star, d, wp, bucket);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    BivariatePoly result = compute(star, d, wp, static_cast<Bucket>(bucket));
    memo.emplace(k, result);
    return result;
  }

  BivariatePoly compute(Label star, const YoungDiagram& d, const PPSubset& wp, Bucket bucket) {
    const int r1 = d.r(1), r2 = d.r(2), r3 = d.r(3);
    if (star == Label::B) {
      if (r2 == 0) return base_gf(BaseKind::BRow, r1 / 2, bucket);
    } else {
      if (d.empty()) return base_gf(BaseKind::DHook, 0, bucket);
      if (r2 == 1 && r3 == 0) return base_gf(BaseKind::DHook, (r1 + 1) / 2, bucket);
    }
    const int k = (r1 - r2) / 2 + 1;
    const int e = bv_dual(OrbitSpec{star, d, Variant::Unique}).c(2);
    const DualDescent c1 = dual_descent(star, d, wp);
    const DualDescent c2 = dual_descent(c1.star, c1.d, c1.wp);
    const bool balanced = r2 == r3 && r3 > 0;
    if (!balanced) {
      // (2,3) primitive or tailed: the double descent is bijective.
      return pq_power(e) * base_gf(BaseKind::DHook, k, bucket) *
             bucketed(star, c2.d, c2.wp, -1);
    }
    return pq_power(e - 1) *
           (base_gf(BaseKind::DHook, k, bucket) *
                bucketed(star, c2.d, c2.wp, static_cast<int>(Bucket::D)) +
            base_gf(BaseKind::H, k, bucket) *
                bucketed(star, c2.d, c2.wp, static_cast<int>(Bucket::CR)));
  }

  BivariatePoly quaternionic_cstar(const YoungDiagram& d) {
    const int r1 = d.r(1), r2 = d.r(2);
    if (r1 == 0) return BivariatePoly::constant(1);  // rank-0 group, empty orbit
    if (r2 == 0) return nu((r1 - 1) / 2);
    const int k = (r1 - r2) / 2 - 1;
    std::vector<int> rest(d.rows().begin() + 2, d.rows().end());
    return pq_power(r2 + 1) * nu(k) * quaternionic_cstar(YoungDiagram(std::move(rest)));
  }
};

}  // namespace

BivariatePoly gf(Label star, const YoungDiagram& d, const PPSubset& wp,
                 std::optional<Bucket> bucket) {
  if (!is_pp_subset(star, d, wp)) throw BadSubset("wp is not a set of primitive pairs");
  GfEngine engine;
  switch (real_pattern(star)) {
    case Label::B:
    case Label::D:
      return engine.bucketed(star, d, wp, bucket ? static_cast<int>(*bucket) : -1);
    case Label::Cstar: {
      if (bucket) throw PreconditionViolated("buckets exist for labels B and D only");
      if (!wp.empty()) return zero_poly();
      return engine.quaternionic_cstar(d);
    }
    case Label::Dstar: {
      if (bucket) throw PreconditionViolated("buckets exist for labels B and D only");
      if (!wp.empty()) return zero_poly();
      const DualDescent child = dual_descent(star, d, wp);
      return BivariatePoly::monomial(0, 0, engine.quaternionic_cstar(child.d).eval_ones());
    }
    case Label::C:
    case Label::Ct: {
      if (bucket) throw PreconditionViolated("buckets exist for labels B and D only");
      if (d.empty()) return BivariatePoly::constant(1);
      const DualDescent child = dual_descent(star, d, wp);
      BigInt value;
      if (classify_star_pair(star, d, 1) == PairClass::Primitive) {
        // One-step descent is bijective.
        value = engine.bucketed(child.star, child.d, child.wp, -1).eval_ones();
      } else {
        // Balanced/tailed: the image misses the s-bucket of the child.
        value = engine.bucketed(child.star, child.d, child.wp, static_cast<int>(Bucket::CR))
                    .eval_ones() +
                engine.bucketed(child.star, child.d, child.wp, static_cast<int>(Bucket::D))
                    .eval_ones();
      }
      return BivariatePoly::monomial(0, 0, value);
    }
    default:
      throw WrongLabel("generating functions exist for the B/C/D labels only");
  }
}

long long count_via_gf(Label star, const GroupForm& group, const YoungDiagram& d,
                       const PPSubset& wp) {
  if (group.label != star) throw WrongLabel("group and orbit labels differ");
  const BivariatePoly f = gf(star, d, wp);
  BigInt value;
  switch (real_pattern(star)) {
    case Label::B:
    case Label::D:
    case Label::Cstar:
      value = f.coefficient(group.p, group.q);
      break;
    default:
      value = f.eval_ones();
      break;
  }
  return static_cast<long long>(value);
}

}  // namespace unip
