#include "unip/labels.hpp"

#include <array>
#include <sstream>

namespace unip {

namespace {

struct LabelInfo {
  Label label;
  std::string_view name;
};

constexpr std::array<LabelInfo, 15> kLabels = {{
    {Label::AR, "AR"},
    {Label::AH, "AH"},
    {Label::A, "A"},
    {Label::At, "At"},
    {Label::B, "B"},
    {Label::D, "D"},
    {Label::C, "C"},
    {Label::Ct, "Ct"},
    {Label::Dstar, "Dstar"},
    {Label::Cstar, "Cstar"},
    {Label::AC, "AC"},
    {Label::BC, "BC"},
    {Label::DC, "DC"},
    {Label::CC, "CC"},
    {Label::CtC, "CtC"},
}};

}  // namespace

bool is_complex(Label star) {
  switch (star) {
    case Label::AC:
    case Label::BC:
    case Label::DC:
    case Label::CC:
    case Label::CtC:
      return true;
    default:
      return false;
  }
}

Label real_pattern(Label star) {
  switch (star) {
    case Label::AC: return Label::A;
    case Label::BC: return Label::B;
    case Label::DC: return Label::D;
    case Label::CC: return Label::C;
    case Label::CtC: return Label::Ct;
    default: return star;
  }
}

std::string_view label_name(Label star) {
  for (const auto& info : kLabels)
    if (info.label == star) return info.name;
  return "?";
}

std::optional<Label> parse_label(std::string_view text) {
  for (const auto& info : kLabels)
    if (info.name == text) return info.label;
  return std::nullopt;
}

Family dual_family(Label star) {
  switch (real_pattern(star)) {
    case Label::AR:
    case Label::AH:
    case Label::A:
    case Label::At:
      return Family::GL;
    case Label::B:
    case Label::Ct:
      return Family::C;  // ǧ symplectic
    case Label::C:
    case Label::Cstar:
      return Family::B;  // ǧ odd orthogonal
    case Label::D:
    case Label::Dstar:
      return Family::D;
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
}

Family g_family(Label star) {
  switch (real_pattern(star)) {
    case Label::AR:
    case Label::AH:
    case Label::A:
    case Label::At:
      return Family::GL;
    case Label::B:
      return Family::B;
    case Label::C:
    case Label::Ct:
    case Label::Cstar:
      return Family::C;
    case Label::D:
    case Label::Dstar:
      return Family::D;
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
}

long long positive_roots(Label star, int n) {
  const long long m = n;
  switch (g_family(star)) {
    case Family::GL: return m * (m - 1) / 2;
    case Family::B:
    case Family::C: return m * m;
    case Family::D: return m * m - m;
  }
  throw Error("unreachable");
}

bool is_very_even(const OrbitSpec& spec) {
  if (dual_family(spec.star) != Family::D) return false;
  for (int row : spec.d.rows())
    if (row % 2 != 0) return false;
  return true;
}

void validate_orbit_spec(const OrbitSpec& spec) {
  const Family fam = dual_family(spec.star);
  if (!is_valid_orbit(spec.d, fam))
    throw InvalidOrbit(to_string(spec.d) + " for label " + std::string(label_name(spec.star)));
  if (fam == Family::B && spec.d.size() % 2 == 0)
    throw InvalidOrbit("odd orthogonal orbit needs odd size");
  if ((fam == Family::C || fam == Family::D) && spec.d.size() % 2 != 0)
    throw InvalidOrbit("symplectic/even orthogonal orbit needs even size");
  const bool ve = is_very_even(spec);
  if (ve && !spec.d.empty() && spec.variant == Variant::Unique)
    throw VariantRequired("very even diagram " + to_string(spec.d));
  if (!ve && spec.variant != Variant::Unique)
    throw InvalidOrbit("variant given for a non-very-even diagram");
}

GroupForm GroupForm::signature(Label label, int p, int q) {
  GroupForm g;
  g.label = label;
  g.p = p;
  g.q = q;
  switch (real_pattern(label)) {
    case Label::A:
    case Label::At:
      g.n = p + q;
      break;
    case Label::B:
      if ((p + q) % 2 == 0) throw Error("SO(p,q) with label B needs p+q odd");
      g.n = (p + q - 1) / 2;
      break;
    case Label::D:
      if ((p + q) % 2 != 0) throw Error("SO(p,q) with label D needs p+q even");
      g.n = (p + q) / 2;
      break;
    case Label::Cstar:
      if (p % 2 != 0 || q % 2 != 0) throw Error("Sp(p/2,q/2) needs p,q even");
      g.n = (p + q) / 2;
      break;
    default:
      throw WrongLabel("label does not take a signature");
  }
  return g;
}

GroupForm GroupForm::rank(Label label, int n) {
  GroupForm g;
  g.label = label;
  g.n = n;
  if (real_pattern(label) == Label::AH && n % 2 != 0)
    throw Error("GL_{n/2}(H) needs n even");
  if (!is_complex(label)) {
    switch (label) {
      case Label::AR:
      case Label::AH:
      case Label::C:
      case Label::Ct:
      case Label::Dstar:
        break;
      default:
        throw WrongLabel("label needs a signature, not a rank");
    }
  }
  return g;
}

bool GroupForm::uses_signature() const {
  if (is_complex(label)) return false;
  switch (label) {
    case Label::A:
    case Label::At:
    case Label::B:
    case Label::D:
    case Label::Cstar:
      return true;
    default:
      return false;
  }
}

std::string to_string(const GroupForm& g) {
  std::ostringstream out;
  switch (g.label) {
    case Label::AR: out << "GL(" << g.n << ",R)"; break;
    case Label::AH: out << "GL(" << g.n / 2 << ",H)"; break;
    case Label::A: out << "U(" << g.p << "," << g.q << ")"; break;
    case Label::At: out << "U~(" << g.p << "," << g.q << ")"; break;
    case Label::B:
    case Label::D: out << "SO(" << g.p << "," << g.q << ")"; break;
    case Label::C: out << "Sp(" << 2 * g.n << ",R)"; break;
    case Label::Ct: out << "Sp~(" << 2 * g.n << ",R)"; break;
    case Label::Dstar: out << "SO*(" << 2 * g.n << ")"; break;
    case Label::Cstar: out << "Sp(" << g.p / 2 << "," << g.q / 2 << ")"; break;
    default: out << label_name(g.label) << ":" << g.n; break;
  }
  return out.str();
}

namespace {

std::pair<int, int> parse_pq(std::string_view text) {
  size_t comma = text.find(',');
  if (comma == std::string_view::npos) throw Error("expected p,q in group '" + std::string(text) + "'");
  return {std::stoi(std::string(text.substr(0, comma))),
          std::stoi(std::string(text.substr(comma + 1)))};
}

}  // namespace

GroupForm parse_group(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("group must look like KIND:params");
  std::string_view kind = text.substr(0, colon);
  std::string_view params = text.substr(colon + 1);
  try {
    if (kind == "GL") return GroupForm::rank(Label::AR, std::stoi(std::string(params)));
    if (kind == "GLH") {
      int nh = std::stoi(std::string(params));  // quaternionic rank
      return GroupForm::rank(Label::AH, 2 * nh);
    }
    if (kind == "U") {
      auto [p, q] = parse_pq(params);
      return GroupForm::signature(Label::A, p, q);
    }
    if (kind == "tU") {
      auto [p, q] = parse_pq(params);
      return GroupForm::signature(Label::At, p, q);
    }
    if (kind == "SO") {
      auto [p, q] = parse_pq(params);
      return GroupForm::signature((p + q) % 2 ? Label::B : Label::D, p, q);
    }
    if (kind == "Sp") {
      int m = std::stoi(std::string(params));
      if (m % 2 != 0) throw Error("Sp:2n needs an even argument");
      return GroupForm::rank(Label::C, m / 2);
    }
    if (kind == "tSp") {
      int m = std::stoi(std::string(params));
      if (m % 2 != 0) throw Error("tSp:2n needs an even argument");
      return GroupForm::rank(Label::Ct, m / 2);
    }
    if (kind == "SOstar") {
      int m = std::stoi(std::string(params));
      if (m % 2 != 0) throw Error("SOstar:2n needs an even argument");
      return GroupForm::rank(Label::Dstar, m / 2);
    }
    if (kind == "SpH") {
      auto [p, q] = parse_pq(params);
      return GroupForm::signature(Label::Cstar, p, q);
    }
  } catch (const std::invalid_argument&) {
    throw Error("bad number in group '" + std::string(text) + "'");
  }
  throw Error("unknown group kind '" + std::string(kind) + "'");
}

int rank_of(Label star, const YoungDiagram& d) {
  switch (dual_family(star)) {
    case Family::GL: return d.size();
    case Family::B: return (d.size() - 1) / 2;
    case Family::C:
    case Family::D: return d.size() / 2;
  }
  throw Error("unreachable");
}

}  // namespace unip
