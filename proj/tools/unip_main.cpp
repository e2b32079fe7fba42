#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "unip/check.hpp"
#include "unip/count.hpp"
#include "unip/descent.hpp"
#include "unip/genfun.hpp"
#include "unip/pbp.hpp"
#include "unip/realforms.hpp"
#include "unip/weyl.hpp"

namespace {

using json = nlohmann::json;
using namespace unip;

struct OrbitArgs {
  std::string star_text;
  std::string orbit_text;
  std::string variant_text = "unique";
  std::string format = "text";
};

void add_orbit_options(CLI::App* cmd, OrbitArgs& args, bool with_variant = true) {
  cmd->add_option("--star", args.star_text, "label (AR AH A At B D C Ct Dstar Cstar ...)")
      ->required();
  cmd->add_option("--orbit", args.orbit_text, "dual orbit diagram, e.g. 5,3,3,1")->required();
  if (with_variant)
    cmd->add_option("--variant", args.variant_text, "very even variant: I or II");
  cmd->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

Label parse_star(const std::string& text) {
  auto label = parse_label(text);
  if (!label) throw Error("unknown label '" + text + "'");
  return *label;
}

OrbitSpec make_spec(const OrbitArgs& args) {
  OrbitSpec spec;
  spec.star = parse_star(args.star_text);
  spec.d = parse_diagram(args.orbit_text);
  if (args.variant_text == "I")
    spec.variant = Variant::I;
  else if (args.variant_text == "II")
    spec.variant = Variant::II;
  else if (args.variant_text != "unique")
    throw Error("variant must be I or II");
  return spec;
}

PPSubset parse_pp(const std::string& text) {
  PPSubset wp;
  if (text.empty()) return wp;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    const std::string part = text.substr(pos, end - pos);
    const size_t comma = part.find(',');
    if (comma == std::string::npos) throw Error("--pp entries look like i,i+1;j,j+1");
    const int i = std::stoi(part.substr(0, comma));
    const int j = std::stoi(part.substr(comma + 1));
    if (j != i + 1) throw Error("star-pairs are consecutive (i, i+1)");
    wp.emplace_back(i, j);
    pos = end + 1;
  }
  return wp;
}

json diagram_json(const YoungDiagram& d) {
  json out = json::array();
  for (int row : d.rows()) out.push_back(row);
  return out;
}

json signature_split_json(const ParitySplit& split) {
  return json{{"good", diagram_json(split.good)},
              {"bad", diagram_json(split.bad)},
              {"nb", split.n_b}};
}

// ---------------------------------------------------------------------------

int run_count(const OrbitArgs& args, const std::string& group_text, bool verify) {
  const Label star = parse_star(args.star_text);
  if (is_complex(star)) {
    const long long count = unip_count_complex(star, parse_diagram(args.orbit_text));
    if (args.format == "json")
      std::cout << json{{"count", count}, {"route", "complex closed form"}}.dump() << "\n";
    else
      std::cout << count << "\n";
    return 0;
  }
  if (group_text.empty()) throw Error("--group is required for real labels");
  const GroupForm group = parse_group(group_text);
  const OrbitSpec spec = make_spec(args);
  const CountReport report = unip_count(group, spec, verify);
  if (args.format == "json") {
    json pp = json::array();
    for (const auto& [i, j] : report.pp) pp.push_back(json::array({i, j}));
    json out{{"count", report.count},
             {"pp", pp},
             {"split", signature_split_json(report.split)},
             {"route", report.route}};
    json checks = json::object();
    for (const auto& [name, value] : report.cross_checks) checks[name] = value;
    out["cross_checks"] = checks;
    if (!report.per_wp.empty()) {
      json per = json::object();
      for (const auto& [key, value] : report.per_wp) per[key] = value;
      out["per_wp"] = per;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << report.count << "\n";
  }
  return 0;
}

int run_pap(const OrbitArgs& args) {
  const Label star = parse_star(args.star_text);
  const YoungDiagram d = parse_diagram(args.orbit_text);
  const auto paintings = enumerate_pap(star, d);
  if (args.format == "json") {
    json arr = json::array();
    for (const Painting& p : paintings) {
      const Signature sig = pap_signature(p);
      arr.push_back(json{{"painting", to_string(p)}, {"p", sig.p}, {"q", sig.q}});
    }
    std::cout << json{{"count", paintings.size()}, {"paintings", arr}}.dump() << "\n";
  } else {
    for (const Painting& p : paintings) {
      const Signature sig = pap_signature(p);
      std::cout << to_string(p) << "  (" << sig.p << "," << sig.q << ")\n";
    }
    std::cout << "count: " << paintings.size() << "\n";
  }
  return 0;
}

int run_pbp(const OrbitArgs& args, const std::string& pp_text, const std::string& group_text,
            const std::string& signature_text) {
  const Label star = parse_star(args.star_text);
  const YoungDiagram d = parse_diagram(args.orbit_text);
  const PPSubset wp = parse_pp(pp_text);
  std::optional<GroupForm> group;
  if (!group_text.empty()) group = parse_group(group_text);
  std::optional<Signature> signature;
  if (!signature_text.empty()) {
    const size_t comma = signature_text.find(',');
    if (comma == std::string::npos) throw Error("--signature looks like p,q");
    signature = Signature{std::stoi(signature_text.substr(0, comma)),
                          std::stoi(signature_text.substr(comma + 1))};
  }
  std::vector<PaintedBipartition> kept;
  for (const auto& t : enumerate_pbp(star, d, wp)) {
    const Signature sig = pbp_signature(t);
    if (signature && !(sig == *signature)) continue;
    if (group) {
      if (group->uses_signature()) {
        if (sig.p != group->p || sig.q != group->q) continue;
      } else if (t.total() != group->n) {
        continue;
      }
    }
    kept.push_back(t);
  }
  if (args.format == "json") {
    json arr = json::array();
    for (const auto& t : kept) {
      const Signature sig = pbp_signature(t);
      arr.push_back(json{{"pbp", to_string(t)},
                         {"p", sig.p},
                         {"q", sig.q},
                         {"group", to_string(group_of(t))}});
    }
    std::cout << json{{"count", kept.size()}, {"elements", arr}}.dump() << "\n";
  } else {
    for (const auto& t : kept) {
      const Signature sig = pbp_signature(t);
      std::cout << to_string(t) << "  (" << sig.p << "," << sig.q << ")  "
                << to_string(group_of(t)) << "\n";
    }
    std::cout << "count: " << kept.size() << "\n";
  }
  return 0;
}

int run_cells(const OrbitArgs& args, const std::string& pp_text) {
  const OrbitSpec spec = make_spec(args);
  const ParitySplit split = split_parity(spec);
  const PPSubset wp = parse_pp(pp_text);
  const CellDiagrams cd = cell_diagrams(spec.star, split.good, wp);
  const auto cell = lusztig_left_cell(spec.star, spec.d, spec.variant);
  if (args.format == "json") {
    json cell_json = json::array();
    for (const auto& element : cell) {
      json wp_json = json::array();
      for (const auto& [i, j] : element.wp) wp_json.push_back(json::array({i, j}));
      cell_json.push_back(json{{"bad", to_string(element.bad.pair)},
                               {"iota", diagram_json(element.good.iota)},
                               {"jmath", diagram_json(element.good.jmath)},
                               {"wp", wp_json}});
    }
    std::cout << json{{"iota", diagram_json(cd.iota)},
                      {"jmath", diagram_json(cd.jmath)},
                      {"left_cell", cell_json}}
                     .dump()
              << "\n";
  } else {
    std::cout << "iota: " << to_string(cd.iota) << "\n";
    std::cout << "jmath: " << to_string(cd.jmath) << "\n";
    std::cout << "left cell (" << cell.size() << " members):\n";
    for (const auto& element : cell) {
      std::cout << "  " << to_string(element.bad.pair) << " (x) "
                << to_string(element.good.iota) << " | " << to_string(element.good.jmath);
      if (!element.wp.empty()) {
        std::cout << "  wp ";
        for (const auto& [i, j] : element.wp) std::cout << "(" << i << "," << j << ")";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_dual(const OrbitArgs& args) {
  const OrbitSpec spec = make_spec(args);
  const HalfIntVector lambda = infinitesimal_character(spec);
  const YoungDiagram dual = bv_dual(spec);
  const long long dim = orbit_dim(dual, g_family(spec.star));
  if (args.format == "json") {
    json lam = json::array();
    for (int twice : lambda.twice) lam.push_back(twice / 2.0);
    std::cout << json{{"lambda", lam}, {"dbv", diagram_json(dual)}, {"dim", dim}}.dump()
              << "\n";
  } else {
    std::cout << "lambda: " << to_string(lambda) << "\n";
    std::cout << "dbv: " << to_string(dual) << "\n";
    std::cout << "dim: " << dim << "\n";
  }
  return 0;
}

int run_descend(const OrbitArgs& args, const std::string& pbp_text, const std::string& pp_text,
                bool steps) {
  const Label star = parse_star(args.star_text);
  YoungDiagram d = parse_diagram(args.orbit_text);
  PPSubset wp = parse_pp(pp_text);
  PaintedBipartition t = parse_pbp(pbp_text);
  if (star_of(t.gamma) != star) throw Error("painting gamma does not match --star");
  json trace = json::array();
  const auto emit = [&](Label s, const YoungDiagram& orbit, const PaintedBipartition& tau) {
    if (args.format == "json")
      trace.push_back(json{{"star", std::string(label_name(s))},
                           {"orbit", diagram_json(orbit)},
                           {"pbp", to_string(tau)}});
    else
      std::cout << label_name(s) << "  " << to_string(orbit) << "  " << to_string(tau) << "\n";
  };
  emit(star, d, t);
  Label cur = star;
  do {
    const DualDescent child = dual_descent(cur, d, wp);
    t = descend(t, d, wp);
    cur = child.star;
    d = child.d;
    wp = child.wp;
    emit(cur, d, t);
  } while (steps && !d.empty());
  if (args.format == "json") std::cout << trace.dump() << "\n";
  return 0;
}

int run_gf(const OrbitArgs& args, const std::string& pp_text, const std::string& bucket_text) {
  const Label star = parse_star(args.star_text);
  const YoungDiagram d = parse_diagram(args.orbit_text);
  const PPSubset wp = parse_pp(pp_text);
  std::optional<Bucket> bucket;
  if (!bucket_text.empty()) {
    if (bucket_text == "d")
      bucket = Bucket::D;
    else if (bucket_text == "cr")
      bucket = Bucket::CR;
    else if (bucket_text == "s")
      bucket = Bucket::S;
    else
      throw Error("--bucket must be d, cr, or s");
  }
  const BivariatePoly f = gf(star, d, wp, bucket);
  if (args.format == "json") {
    json terms = json::array();
    for (const auto& [key, coeff] : f.terms())
      terms.push_back(json::array({key.first, key.second, coeff.str()}));
    std::cout << json{{"terms", terms}, {"text", to_string(f)}}.dump() << "\n";
  } else {
    std::cout << to_string(f) << "\n";
  }
  return 0;
}

int run_oracle_coh(const OrbitArgs& args, const std::string& group_text,
                   const std::string& irrep_text) {
  const Label star = parse_star(args.star_text);
  const GroupForm group = parse_group(group_text);
  if (!irrep_text.empty()) {
    // Direct good-part multiplicity of a W_n bipartition "left|right".
    const size_t bar = irrep_text.find('|');
    if (bar == std::string::npos) throw Error("--irrep looks like left|right");
    const Bipartition target{parse_diagram(irrep_text.substr(0, bar)),
                             parse_diagram(irrep_text.substr(bar + 1))};
    const long long mult = coh_multiplicity_good(star, group, target);
    if (args.format == "json")
      std::cout << json{{"multiplicity", mult}}.dump() << "\n";
    else
      std::cout << mult << "\n";
    return 0;
  }
  const OrbitSpec spec = make_spec(args);
  const auto cell = lusztig_left_cell(spec.star, spec.d, spec.variant);
  long long total = 0;
  json rows = json::array();
  for (const auto& element : cell) {
    const long long mult = coh_multiplicity(star, group, spec, element);
    total += mult;
    if (args.format == "json") {
      rows.push_back(json{{"bad", to_string(element.bad.pair)},
                          {"iota", diagram_json(element.good.iota)},
                          {"jmath", diagram_json(element.good.jmath)},
                          {"multiplicity", mult}});
    } else {
      std::cout << to_string(element.bad.pair) << " (x) " << to_string(element.good.iota)
                << " | " << to_string(element.good.jmath) << "  ->  " << mult << "\n";
    }
  }
  if (args.format == "json")
    std::cout << json{{"total", total}, {"members", rows}}.dump() << "\n";
  else
    std::cout << "total: " << total << "\n";
  return 0;
}

int run_oracle_real(const std::string& group_text, const std::string& shape_text,
                    const std::string& format) {
  const GroupForm group = parse_group(group_text);
  const long long count = count_real_orbits(group, parse_diagram(shape_text));
  if (format == "json")
    std::cout << json{{"count", count}}.dump() << "\n";
  else
    std::cout << count << "\n";
  return 0;
}

int run_check(int max_size, int threads) {
  const auto results = run_checks(max_size, threads);
  bool all_ok = true;
  for (const auto& result : results) {
    all_ok = all_ok && result.ok();
    std::cout << (result.ok() ? "PASS" : "FAIL") << "  " << result.name << "  ("
              << result.cases << " cases)";
    if (!result.ok()) std::cout << "  first failure: " << result.detail;
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting parameters of special unipotent representations"};
  app.require_subcommand(1);

  OrbitArgs count_args, pap_args, pbp_args, cells_args, dual_args, descend_args, gf_args,
      coh_args;
  std::string count_group, pbp_pp, pbp_group, pbp_signature_text, cells_pp, descend_pbp,
      descend_pp, gf_pp, gf_bucket, coh_group, coh_irrep, real_group, real_shape,
      real_format = "text";
  bool count_verify = false, descend_steps = false;
  int check_max_size = 10, check_threads = 0;

  auto* count_cmd = app.add_subcommand("count", "count the unipotent parameters");
  add_orbit_options(count_cmd, count_args);
  count_cmd->add_option("--group", count_group, "real group, e.g. Sp:4 or SO:2,1");
  count_cmd->add_flag("--verify", count_verify, "run all independent routes");

  auto* pap_cmd = app.add_subcommand("pap", "enumerate type A painted partitions");
  add_orbit_options(pap_cmd, pap_args, /*with_variant=*/false);

  auto* pbp_cmd = app.add_subcommand("pbp", "enumerate painted bipartitions");
  add_orbit_options(pbp_cmd, pbp_args, /*with_variant=*/false);
  pbp_cmd->add_option("--pp", pbp_pp, "primitive pairs, e.g. 1,2;5,6");
  pbp_cmd->add_option("--group", pbp_group, "keep elements of this group");
  pbp_cmd->add_option("--signature", pbp_signature_text, "keep elements with signature p,q");

  auto* cells_cmd = app.add_subcommand("cells", "cell diagrams and the Lusztig left cell");
  add_orbit_options(cells_cmd, cells_args);
  cells_cmd->add_option("--pp", cells_pp, "primitive pairs for the displayed pair");

  auto* dual_cmd = app.add_subcommand("dual", "infinitesimal character and BV dual");
  add_orbit_options(dual_cmd, dual_args);

  auto* descend_cmd = app.add_subcommand("descend", "descend a painted bipartition");
  add_orbit_options(descend_cmd, descend_args, /*with_variant=*/false);
  descend_cmd->add_option("--pbp", descend_pbp, "painted bipartition P|Q|gamma")->required();
  descend_cmd->add_option("--pp", descend_pp, "primitive pairs");
  descend_cmd->add_flag("--steps", descend_steps, "iterate to the base");

  auto* gf_cmd = app.add_subcommand("gf", "signature generating function");
  add_orbit_options(gf_cmd, gf_args, /*with_variant=*/false);
  gf_cmd->add_option("--pp", gf_pp, "primitive pairs");
  gf_cmd->add_option("--bucket", gf_bucket, "restrict to a tail bucket: d, cr, s");

  auto* oracle_cmd = app.add_subcommand("oracle", "independent counting oracles");
  oracle_cmd->require_subcommand(1);
  auto* coh_cmd = oracle_cmd->add_subcommand("coh", "coherent continuation multiplicity");
  add_orbit_options(coh_cmd, coh_args);
  coh_cmd->get_option("--orbit")->required(false);
  coh_cmd->add_option("--group", coh_group, "real group")->required();
  coh_cmd->add_option("--irrep", coh_irrep, "W_n bipartition left|right");
  auto* real_cmd = oracle_cmd->add_subcommand("real-orbits", "signed Young diagram counting");
  real_cmd->add_option("--group", real_group, "U:p,q / SpH:p,q / SOstar:2n")->required();
  real_cmd->add_option("--shape", real_shape, "orbit diagram of the complexified algebra")
      ->required();
  real_cmd->add_option("--format", real_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check_cmd = app.add_subcommand("check", "run the property-test battery");
  check_cmd->add_option("--max-size", check_max_size, "diagram size bound");
  check_cmd->add_option("--threads", check_threads, "worker threads (default UNIP_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_args, count_group, count_verify);
    if (pap_cmd->parsed()) return run_pap(pap_args);
    if (pbp_cmd->parsed())
      return run_pbp(pbp_args, pbp_pp, pbp_group, pbp_signature_text);
    if (cells_cmd->parsed()) return run_cells(cells_args, cells_pp);
    if (dual_cmd->parsed()) return run_dual(dual_args);
    if (descend_cmd->parsed())
      return run_descend(descend_args, descend_pbp, descend_pp, descend_steps);
    if (gf_cmd->parsed()) return run_gf(gf_args, gf_pp, gf_bucket);
    if (oracle_cmd->parsed()) {
      if (coh_cmd->parsed()) return run_oracle_coh(coh_args, coh_group, coh_irrep);
      if (real_cmd->parsed()) return run_oracle_real(real_group, real_shape, real_format);
    }
    if (check_cmd->parsed()) return run_check(check_max_size, check_threads);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
