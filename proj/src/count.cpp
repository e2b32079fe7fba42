#include "unip/count.hpp"

#include <sstream>

#include "unip/genfun.hpp"
#include "unip/pbp.hpp"
#include "unip/realforms.hpp"
#include "unip/weyl.hpp"

namespace unip {

namespace {

void check_sizes(const GroupForm& group, const OrbitSpec& spec) {
  const int size = spec.d.size();
  switch (real_pattern(spec.star)) {
    case Label::AR:
    case Label::AH:
      if (size != group.n) throw SizeMismatch("|d| must equal n");
      break;
    case Label::A:
    case Label::At:
      if (size != group.p + group.q) throw SizeMismatch("|d| must equal p+q");
      break;
    case Label::B:
      if (size != group.p + group.q - 1) throw SizeMismatch("|d| must equal p+q-1");
      break;
    case Label::D:
      if (size != group.p + group.q) throw SizeMismatch("|d| must equal p+q");
      break;
    case Label::C:
    case Label::Ct:
      if (size != 2 * group.n + (real_pattern(spec.star) == Label::C ? 1 : 0))
        throw SizeMismatch("|d| must match the rank");
      break;
    case Label::Cstar:
      if (size != group.p + group.q + 1) throw SizeMismatch("|d| must equal p+q+1");
      break;
    case Label::Dstar:
      if (size != 2 * group.n) throw SizeMismatch("|d| must equal 2n");
      break;
    default:
      throw WrongLabel("real group expected");
  }
}

long long count_pap_with_signature(Label star, const YoungDiagram& d_good, int p, int q) {
  long long count = 0;
  for (const Painting& painting : enumerate_pap(star, d_good)) {
    const Signature sig = pap_signature(painting);
    if (sig.p == p && sig.q == q) ++count;
  }
  return count;
}

long long good_enumeration_count(Label star, const GroupForm& good_group,
                                 const YoungDiagram& d_good, const PPSubset& wp) {
  long long count = 0;
  for (const PaintedBipartition& t : enumerate_pbp(star, d_good, wp)) {
    const Signature sig = pbp_signature(t);
    if (good_group.uses_signature()) {
      if (sig.p == good_group.p && sig.q == good_group.q) ++count;
    } else {
      if (t.total() == good_group.n) ++count;
    }
  }
  return count;
}

GroupForm good_part_group(const GroupForm& group, int n_b) {
  if (group.uses_signature())
    return GroupForm{group.label, group.p - n_b, group.q - n_b, group.n - n_b};
  return GroupForm{group.label, 0, 0, group.n - n_b};
}

}  // namespace

CountReport unip_count(const GroupForm& group, const OrbitSpec& spec, bool verify) {
  if (group.label != spec.star) throw WrongLabel("group and orbit labels differ");
  validate_orbit_spec(spec);
  check_sizes(group, spec);

  CountReport report;
  report.split = split_parity(spec);
  const ParitySplit& split = report.split;
  const Label pattern = real_pattern(spec.star);

  if (pattern == Label::AR || pattern == Label::AH) {
    const auto paintings = enumerate_pap(spec.star, spec.d);
    report.count = static_cast<long long>(paintings.size());
    report.route = "painted-partition enumeration";
    report.cross_checks["enumeration"] = report.count;
    if (verify) {
      if (pattern == Label::AR) {
        long long product = 1;
        const auto& rows = spec.d.rows();
        for (size_t i = 0; i < rows.size();) {
          size_t j = i;
          while (j < rows.size() && rows[j] == rows[i]) ++j;
          product *= static_cast<long long>(j - i) + 1;
          i = j;
        }
        report.cross_checks["product-formula"] = product;
      }
      report.cross_checks["oracle"] = coh_multiplicity_gl(spec.star, spec);
    }
    return report;
  }

  if (pattern == Label::A || pattern == Label::At) {
    if (!split.bad_half) {
      report.count = 0;
      report.route = "no even bad-row pairing";
      return report;
    }
    report.count =
        count_pap_with_signature(spec.star, split.good, group.p - split.n_b, group.q - split.n_b);
    report.route = "signature-filtered painted partitions";
    report.cross_checks["enumeration"] = report.count;
    if (verify) {
      report.cross_checks["oracle"] =
          coh_multiplicity_unitary(split.good, group.p - split.n_b, group.q - split.n_b);
      if (split.bad.empty() && pattern == Label::A)
        report.cross_checks["realforms"] =
            count_real_orbits(group, bv_dual(spec));
    }
    return report;
  }

  // B/C/C̃/D/C*/D*.
  report.pp = primitive_pairs(spec.star, split.good);
  if (!relevance(group, spec)) {
    report.count = 0;
    report.route = "not relevant";
    return report;
  }

  long long bad_factor = 1;
  if (pattern == Label::B || pattern == Label::C || pattern == Label::Ct ||
      pattern == Label::D) {
    bad_factor = static_cast<long long>(enumerate_pap(Label::AR, *split.bad_half).size());
  }
  const GroupForm good_group = good_part_group(group, split.n_b);
  const long long base = good_enumeration_count(spec.star, good_group, split.good, {});
  long long good_factor = base;
  if (pattern != Label::Cstar && pattern != Label::Dstar)
    good_factor = base << report.pp.size();
  report.count = bad_factor * good_factor;
  {
    std::ostringstream route;
    route << "reduction x good-parity counting (bad " << bad_factor << ", good " << good_factor
          << ")";
    report.route = route.str();
  }
  report.cross_checks["enumeration"] = report.count;

  if (verify) {
    // Generating-function route.
    long long gf_good = count_via_gf(spec.star, good_group, split.good, {});
    if (pattern != Label::Cstar && pattern != Label::Dstar) gf_good <<= report.pp.size();
    report.cross_checks["genfun"] = bad_factor * gf_good;
    // Weyl-group coherent continuation route.
    report.cross_checks["oracle"] = coh_left_cell_sum(group, spec);
    // Real-orbit route for the quaternionic labels in good parity.
    if (split.bad.empty() && (pattern == Label::Cstar || pattern == Label::Dstar))
      report.cross_checks["realforms"] = count_real_orbits(group, bv_dual(spec));
    for (const auto& wp : pp_subsets(spec.star, split.good)) {
      std::ostringstream key;
      for (size_t i = 0; i < wp.size(); ++i)
        key << (i ? ";" : "") << wp[i].first << ',' << wp[i].second;
      report.per_wp[key.str()] =
          good_enumeration_count(spec.star, good_group, split.good, wp);
    }
    for (const auto& [name, value] : report.cross_checks)
      if (value != report.count)
        throw Error("cross-check '" + name + "' disagrees: " + std::to_string(value) + " vs " +
                    std::to_string(report.count));
  }
  return report;
}

long long unip_count_complex(Label star, const YoungDiagram& d) {
  if (!is_complex(star)) throw WrongLabel("complex label expected");
  if (!is_valid_orbit(d, dual_family(star))) throw InvalidOrbit(to_string(d));
  if (real_pattern(star) == Label::A) return 1;
  const Variant variant =
      is_very_even(OrbitSpec{star, d, Variant::Unique}) && !d.empty() ? Variant::I
                                                                       : Variant::Unique;
  const ParitySplit split = split_parity(OrbitSpec{star, d, variant});
  return 1LL << primitive_pairs(star, split.good).size();
}

}  // namespace unip
