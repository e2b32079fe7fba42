#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unip/count.hpp"
#include "unip/descent.hpp"
#include "unip/genfun.hpp"
#include "unip/pbp.hpp"
#include "unip/realforms.hpp"
#include "unip/weyl.hpp"

namespace py = pybind11;
using namespace unip;

namespace {

YoungDiagram make_diagram(const std::vector<int>& rows) {
  return YoungDiagram::from_multiset(rows);
}

Label star_from(const std::string& text) {
  auto label = parse_label(text);
  if (!label) throw Error("unknown label '" + text + "'");
  return *label;
}

Family family_from(const std::string& text) {
  if (text == "GL") return Family::GL;
  if (text == "B") return Family::B;
  if (text == "C") return Family::C;
  if (text == "D") return Family::D;
  throw Error("family must be GL, B, C, or D");
}

OrbitSpec spec_from(const std::string& star, const std::vector<int>& orbit,
                    const std::string& variant) {
  OrbitSpec spec;
  spec.star = star_from(star);
  spec.d = make_diagram(orbit);
  if (variant == "I")
    spec.variant = Variant::I;
  else if (variant == "II")
    spec.variant = Variant::II;
  else if (!variant.empty() && variant != "unique")
    throw Error("variant must be I, II, or unique");
  return spec;
}

PPSubset pp_from(const std::vector<int>& firsts) {
  PPSubset wp;
  for (int i : firsts) wp.emplace_back(i, i + 1);
  return wp;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting parameters of special unipotent representations";

  py::register_exception<Error>(m, "UnipError");

  m.def(
      "transpose",
      [](const std::vector<int>& rows) { return make_diagram(rows).transpose().rows(); },
      py::arg("rows"));
  m.def(
      "is_valid_orbit",
      [](const std::vector<int>& rows, const std::string& family) {
        return is_valid_orbit(make_diagram(rows), family_from(family));
      },
      py::arg("rows"), py::arg("family"));
  m.def(
      "collapse",
      [](const std::vector<int>& rows, const std::string& family) {
        return collapse(make_diagram(rows), family_from(family)).rows();
      },
      py::arg("rows"), py::arg("family"));
  m.def(
      "orbit_dim",
      [](const std::vector<int>& rows, const std::string& family) {
        return orbit_dim(make_diagram(rows), family_from(family));
      },
      py::arg("rows"), py::arg("family"));

  m.def(
      "split_parity",
      [](const std::string& star, const std::vector<int>& orbit, const std::string& variant) {
        const ParitySplit split = split_parity(spec_from(star, orbit, variant));
        py::dict out;
        out["good"] = split.good.rows();
        out["bad"] = split.bad.rows();
        out["nb"] = split.n_b;
        return out;
      },
      py::arg("star"), py::arg("orbit"), py::arg("variant") = "unique");

  m.def(
      "infinitesimal_character",
      [](const std::string& star, const std::vector<int>& orbit, const std::string& variant) {
        const HalfIntVector lambda =
            infinitesimal_character(spec_from(star, orbit, variant));
        std::vector<double> out;
        for (int twice : lambda.twice) out.push_back(twice / 2.0);
        return out;
      },
      py::arg("star"), py::arg("orbit"), py::arg("variant") = "unique");
  m.def(
      "bv_dual",
      [](const std::string& star, const std::vector<int>& orbit, const std::string& variant) {
        return bv_dual(spec_from(star, orbit, variant)).rows();
      },
      py::arg("star"), py::arg("orbit"), py::arg("variant") = "unique");

  m.def(
      "primitive_pairs",
      [](const std::string& star, const std::vector<int>& orbit) {
        return primitive_pairs(star_from(star), make_diagram(orbit));
      },
      py::arg("star"), py::arg("orbit"));
  m.def(
      "cell_diagrams",
      [](const std::string& star, const std::vector<int>& orbit, const std::vector<int>& pp) {
        const CellDiagrams cd =
            cell_diagrams(star_from(star), make_diagram(orbit), pp_from(pp));
        return py::make_tuple(cd.iota.rows(), cd.jmath.rows());
      },
      py::arg("star"), py::arg("orbit"), py::arg("pp") = std::vector<int>{});

  m.def(
      "pap",
      [](const std::string& star, const std::vector<int>& orbit) {
        std::vector<std::string> out;
        for (const Painting& p : enumerate_pap(star_from(star), make_diagram(orbit)))
          out.push_back(to_string(p));
        return out;
      },
      py::arg("star"), py::arg("orbit"));
  m.def(
      "pap_signature",
      [](const std::string& painting) {
        const Signature sig = pap_signature(parse_painting(painting));
        return py::make_tuple(sig.p, sig.q);
      },
      py::arg("painting"));

  m.def(
      "pbp",
      [](const std::string& star, const std::vector<int>& orbit, const std::vector<int>& pp) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_pbp(star_from(star), make_diagram(orbit), pp_from(pp)))
          out.push_back(to_string(t));
        return out;
      },
      py::arg("star"), py::arg("orbit"), py::arg("pp") = std::vector<int>{});
  m.def(
      "pbp_signature",
      [](const std::string& text) {
        const Signature sig = pbp_signature(parse_pbp(text));
        return py::make_tuple(sig.p, sig.q);
      },
      py::arg("pbp"));
  m.def(
      "group_of",
      [](const std::string& text) { return to_string(group_of(parse_pbp(text))); },
      py::arg("pbp"));

  m.def(
      "descend",
      [](const std::string& pbp_text, const std::vector<int>& orbit,
         const std::vector<int>& pp) {
        const PaintedBipartition t = parse_pbp(pbp_text);
        return to_string(descend(t, make_diagram(orbit), pp_from(pp)));
      },
      py::arg("pbp"), py::arg("orbit"), py::arg("pp") = std::vector<int>{});
  m.def(
      "naive_descent",
      [](const std::string& pbp_text) { return to_string(naive_descent(parse_pbp(pbp_text))); },
      py::arg("pbp"));

  m.def(
      "gf",
      [](const std::string& star, const std::vector<int>& orbit, const std::vector<int>& pp,
         const std::string& bucket) {
        std::optional<Bucket> b;
        if (bucket == "d")
          b = Bucket::D;
        else if (bucket == "cr")
          b = Bucket::CR;
        else if (bucket == "s")
          b = Bucket::S;
        else if (!bucket.empty())
          throw Error("bucket must be d, cr, or s");
        return to_string(gf(star_from(star), make_diagram(orbit), pp_from(pp), b));
      },
      py::arg("star"), py::arg("orbit"), py::arg("pp") = std::vector<int>{},
      py::arg("bucket") = "");

  m.def(
      "count_real_orbits",
      [](const std::string& group, const std::vector<int>& shape) {
        return count_real_orbits(parse_group(group), make_diagram(shape));
      },
      py::arg("group"), py::arg("shape"));

  m.def(
      "unip_count",
      [](const std::string& group, const std::string& star, const std::vector<int>& orbit,
         const std::string& variant, bool verify) {
        const Label label = star_from(star);
        if (is_complex(label)) {
          py::dict out;
          out["count"] = unip_count_complex(label, make_diagram(orbit));
          out["route"] = "complex closed form";
          return out;
        }
        const CountReport report =
            unip_count(parse_group(group), spec_from(star, orbit, variant), verify);
        py::dict out;
        out["count"] = report.count;
        out["route"] = report.route;
        py::list pp;
        for (const auto& [i, j] : report.pp) pp.append(py::make_tuple(i, j));
        out["pp"] = pp;
        py::dict checks;
        for (const auto& [name, value] : report.cross_checks)
          checks[py::str(name)] = value;
        out["cross_checks"] = checks;
        return out;
      },
      py::arg("group"), py::arg("star"), py::arg("orbit"), py::arg("variant") = "unique",
      py::arg("verify") = false);
}
