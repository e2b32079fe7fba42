#include "unip/pbp.hpp"

#include <algorithm>
#include <array>

#include "unip/parity.hpp"

namespace unip {

namespace {

constexpr std::array<Symbol, 5> kAll = {Symbol::Dot, Symbol::S, Symbol::R, Symbol::C, Symbol::D};

// Alphabet tables from the painted-bipartition definition, in rank order.
constexpr std::array<Symbol, 2> kDotC = {Symbol::Dot, Symbol::C};
constexpr std::array<Symbol, 4> kDotRCD = {Symbol::Dot, Symbol::R, Symbol::C, Symbol::D};
constexpr std::array<Symbol, 5> kDotSRCD = {Symbol::Dot, Symbol::S, Symbol::R, Symbol::C,
                                            Symbol::D};
constexpr std::array<Symbol, 3> kDotSC = {Symbol::Dot, Symbol::S, Symbol::C};
constexpr std::array<Symbol, 1> kDotOnly = {Symbol::Dot};
constexpr std::array<Symbol, 2> kDotS = {Symbol::Dot, Symbol::S};
constexpr std::array<Symbol, 4> kDotSRD = {Symbol::Dot, Symbol::S, Symbol::R, Symbol::D};
constexpr std::array<Symbol, 3> kDotRD = {Symbol::Dot, Symbol::R, Symbol::D};
constexpr std::array<Symbol, 3> kDotSR = {Symbol::Dot, Symbol::S, Symbol::R};
constexpr std::array<Symbol, 2> kDotR = {Symbol::Dot, Symbol::R};
constexpr std::array<Symbol, 3> kDotCD = {Symbol::Dot, Symbol::C, Symbol::D};
constexpr std::array<Symbol, 2> kDotD = {Symbol::Dot, Symbol::D};

}  // namespace

Label star_of(Gamma gamma) {
  switch (gamma) {
    case Gamma::BPlus:
    case Gamma::BMinus: return Label::B;
    case Gamma::C: return Label::C;
    case Gamma::D: return Label::D;
    case Gamma::Ct: return Label::Ct;
    case Gamma::Cstar: return Label::Cstar;
    case Gamma::Dstar: return Label::Dstar;
  }
  throw Error("unreachable");
}

std::string_view gamma_name(Gamma gamma) {
  switch (gamma) {
    case Gamma::BPlus: return "B+";
    case Gamma::BMinus: return "B-";
    case Gamma::C: return "C";
    case Gamma::D: return "D";
    case Gamma::Ct: return "Ct";
    case Gamma::Cstar: return "Cstar";
    case Gamma::Dstar: return "Dstar";
  }
  return "?";
}

Gamma parse_gamma(std::string_view text) {
  for (Gamma g : {Gamma::BPlus, Gamma::BMinus, Gamma::C, Gamma::D, Gamma::Ct, Gamma::Cstar,
                  Gamma::Dstar})
    if (gamma_name(g) == text) return g;
  throw Error("unknown gamma '" + std::string(text) + "'");
}

std::span<const Symbol> p_alphabet(Gamma gamma) {
  switch (gamma) {
    case Gamma::BPlus:
    case Gamma::BMinus: return kDotC;
    case Gamma::C: return kDotRCD;
    case Gamma::D: return kDotSRCD;
    case Gamma::Ct: return kDotSC;
    case Gamma::Cstar: return kDotOnly;
    case Gamma::Dstar: return kDotS;
  }
  throw Error("unreachable");
}

std::span<const Symbol> q_alphabet(Gamma gamma) {
  switch (gamma) {
    case Gamma::BPlus:
    case Gamma::BMinus: return kDotSRD;
    case Gamma::C: return kDotS;
    case Gamma::D: return kDotOnly;
    case Gamma::Ct: return kDotRD;
    case Gamma::Cstar: return kDotSR;
    case Gamma::Dstar: return kDotR;
  }
  throw Error("unreachable");
}

std::string to_string(const PaintedBipartition& t) {
  return to_string(t.P) + "|" + to_string(t.Q) + "|" + std::string(gamma_name(t.gamma));
}

PaintedBipartition parse_pbp(std::string_view text) {
  const size_t first = text.find('|');
  const size_t second = text.find('|', first == std::string_view::npos ? first : first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos)
    throw Error("painted bipartition must look like P|Q|gamma");
  PaintedBipartition t;
  t.P = parse_painting(text.substr(0, first));
  t.Q = parse_painting(text.substr(first + 1, second - first - 1));
  t.gamma = parse_gamma(text.substr(second + 1));
  return t;
}

bool validate_pbp(const PaintedBipartition& t) {
  if (!is_valid_painting(t.P) || !is_valid_painting(t.Q)) return false;
  const auto allowed = [](const Painting& painting, std::span<const Symbol> alphabet) {
    for (Symbol s : kAll) {
      if (std::find(alphabet.begin(), alphabet.end(), s) != alphabet.end()) continue;
      if (painting.count(s) > 0) return false;
    }
    return true;
  };
  if (!allowed(t.P, p_alphabet(t.gamma)) || !allowed(t.Q, q_alphabet(t.gamma))) return false;
  return t.P.boxes_with(Symbol::Dot) == t.Q.boxes_with(Symbol::Dot);
}

Signature pbp_signature(const PaintedBipartition& t) {
  const Label star = star_of(t.gamma);
  if (star == Label::C || star == Label::Ct || star == Label::Dstar)
    return Signature{t.total(), t.total()};
  const auto count = [&t](Symbol s) { return t.P.count(s) + t.Q.count(s); };
  Signature sig;
  sig.p = count(Symbol::Dot) + 2 * count(Symbol::R) + count(Symbol::C) + count(Symbol::D) +
          (t.gamma == Gamma::BPlus ? 1 : 0);
  sig.q = count(Symbol::Dot) + 2 * count(Symbol::S) + count(Symbol::C) + count(Symbol::D) +
          (t.gamma == Gamma::BMinus ? 1 : 0);
  return sig;
}

GroupForm group_of(const PaintedBipartition& t) {
  const Signature sig = pbp_signature(t);
  switch (star_of(t.gamma)) {
    case Label::B: return GroupForm::signature(Label::B, sig.p, sig.q);
    case Label::D: return GroupForm::signature(Label::D, sig.p, sig.q);
    case Label::C: return GroupForm::rank(Label::C, t.total());
    case Label::Ct: return GroupForm::rank(Label::Ct, t.total());
    case Label::Cstar: return GroupForm::signature(Label::Cstar, sig.p, sig.q);
    case Label::Dstar: return GroupForm::rank(Label::Dstar, t.total());
    default: throw Error("unreachable");
  }
}

std::vector<Painting> enumerate_pap(Label star, const YoungDiagram& d) {
  const Label pattern = real_pattern(star);
  std::span<const Symbol> alphabet;
  bool column_parity = false;
  switch (pattern) {
    case Label::AR:
      alphabet = kDotCD;
      column_parity = true;
      break;
    case Label::AH:
      alphabet = kDotOnly;
      column_parity = true;
      break;
    case Label::A:
    case Label::At:
      alphabet = kDotSR;
      break;
    default:
      throw WrongLabel("PAP exists for the GL-family labels only");
  }
  const YoungDiagram shape = d.transpose();
  std::vector<Painting> out;
  for (const YoungDiagram& dots : layer_extensions(YoungDiagram(), shape, StripKind::Any)) {
    bool ok = true;
    if (column_parity) {
      for (int j = 1; j <= dots.num_cols() && ok; ++j) ok = dots.c(j) % 2 == 0;
    } else {
      for (int i = 1; i <= dots.num_rows() && ok; ++i) ok = dots.r(i) % 2 == 0;
    }
    if (!ok) continue;
    auto batch = paintings_with_dots(shape, dots, alphabet);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

Signature pap_signature(const Painting& p) {
  const int dots = p.count(Symbol::Dot);
  return Signature{dots / 2 + p.count(Symbol::R), dots / 2 + p.count(Symbol::S)};
}

namespace {

std::vector<PaintedBipartition> enumerate_on_shapes(const YoungDiagram& iota,
                                                    const YoungDiagram& jmath, Gamma gamma) {
  std::vector<PaintedBipartition> out;
  // Common •-diagrams are exactly the subdiagrams of the pointwise minimum.
  std::vector<int> min_rows;
  for (int i = 1; i <= std::min(iota.num_rows(), jmath.num_rows()); ++i)
    min_rows.push_back(std::min(iota.r(i), jmath.r(i)));
  const YoungDiagram common(std::move(min_rows));
  for (const YoungDiagram& dots : layer_extensions(YoungDiagram(), common, StripKind::Any)) {
    const auto ps = paintings_with_dots(iota, dots, p_alphabet(gamma));
    if (ps.empty()) continue;
    const auto qs = paintings_with_dots(jmath, dots, q_alphabet(gamma));
    for (const Painting& p : ps)
      for (const Painting& q : qs) out.push_back(PaintedBipartition{p, q, gamma});
  }
  return out;
}

}  // namespace

std::vector<PaintedBipartition> enumerate_pbp(Label star, const YoungDiagram& d_good,
                                              const PPSubset& wp) {
  const CellDiagrams shapes = cell_diagrams(star, d_good, wp);
  std::vector<Gamma> gammas;
  switch (real_pattern(star)) {
    case Label::B: gammas = {Gamma::BPlus, Gamma::BMinus}; break;
    case Label::C: gammas = {Gamma::C}; break;
    case Label::D: gammas = {Gamma::D}; break;
    case Label::Ct: gammas = {Gamma::Ct}; break;
    case Label::Cstar: gammas = {Gamma::Cstar}; break;
    case Label::Dstar: gammas = {Gamma::Dstar}; break;
    default: throw WrongLabel("painted bipartitions exist for the B/C/D labels only");
  }
  std::vector<PaintedBipartition> out;
  for (Gamma gamma : gammas) {
    auto batch = enumerate_on_shapes(shapes.iota, shapes.jmath, gamma);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<std::pair<Painting, Painting>> enumerate_pbp_bad(Label star,
                                                             const YoungDiagram& d_b) {
  std::span<const Symbol> p_alpha, q_alpha;
  switch (real_pattern(star)) {
    case Label::B:
    case Label::Ct:
      p_alpha = kDotCD;
      q_alpha = kDotOnly;
      break;
    case Label::C:
    case Label::D:
      p_alpha = kDotD;
      q_alpha = kDotC;
      break;
    case Label::Cstar:
    case Label::Dstar:
      p_alpha = kDotOnly;
      q_alpha = kDotOnly;
      break;
    default:
      throw WrongLabel("PBP* exists for the B/C/D labels only");
  }
  const TauBad tau = tau_bad(star, d_b, Variant::Unique);
  const YoungDiagram& left = tau.pair.left;
  const YoungDiagram& right = tau.pair.right;
  std::vector<int> min_rows;
  for (int i = 1; i <= std::min(left.num_rows(), right.num_rows()); ++i)
    min_rows.push_back(std::min(left.r(i), right.r(i)));
  const YoungDiagram common(std::move(min_rows));
  std::vector<std::pair<Painting, Painting>> out;
  for (const YoungDiagram& dots : layer_extensions(YoungDiagram(), common, StripKind::Any)) {
    const auto ps = paintings_with_dots(left, dots, p_alpha);
    if (ps.empty()) continue;
    const auto qs = paintings_with_dots(right, dots, q_alpha);
    for (const Painting& p : ps)
      for (const Painting& q : qs) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace unip
