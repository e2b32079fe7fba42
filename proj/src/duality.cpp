#include "unip/duality.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace unip {

std::string to_string(const HalfIntVector& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.twice.size(); ++i) {
    if (i) out << ',';
    if (v.twice[i] % 2 == 0)
      out << v.twice[i] / 2;
    else
      out << v.twice[i] << "/2";
  }
  return out.str();
}

HalfIntVector infinitesimal_character(const OrbitSpec& spec) {
  validate_orbit_spec(spec);
  std::vector<int> doubled;  // 2*(h/2 eigenvalues) of the standard module
  for (int row : spec.d.rows())
    for (int v = row - 1; v >= 1 - row; v -= 2) doubled.push_back(v);

  HalfIntVector out;
  if (dual_family(spec.star) == Family::GL) {
    std::sort(doubled.begin(), doubled.end(), std::greater<>());
    out.twice = std::move(doubled);
    return out;
  }
  int zeros = 0;
  for (int v : doubled) {
    if (v > 0) out.twice.push_back(v);
    if (v == 0) ++zeros;
  }
  std::sort(out.twice.begin(), out.twice.end(), std::greater<>());
  for (int k = 0; k < zeros / 2; ++k) out.twice.push_back(0);
  if (spec.variant == Variant::II && !out.twice.empty()) out.twice.back() *= -1;
  return out;
}

BadPartType bad_part_type(Label star, const YoungDiagram& d_b, Variant variant) {
  const Label pattern = real_pattern(star);
  if (pattern == Label::Ct) {
    // Applied to the good part: type I iff n_g/2 is even.
    const int n_g = d_b.size() / 2;
    if (n_g % 2 != 0) return BadPartType::I;  // decoration never consulted
    return (n_g / 2) % 2 == 0 ? BadPartType::I : BadPartType::II;
  }
  if (pattern != Label::C && pattern != Label::Cstar && pattern != Label::D &&
      pattern != Label::Dstar)
    throw WrongLabel(std::string(label_name(star)));
  const auto& rows = d_b.rows();
  for (size_t i = 0; i < rows.size();) {
    size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if (rows[i] % 2 != 0 || (j - i) % 2 != 0)
      throw BadParityViolation("bad part must have even rows with even multiplicities");
    i = j;
  }
  const int n_b = d_b.size() / 2;
  const int negatives = variant == Variant::II ? 1 : 0;
  return (negatives - n_b / 2) % 2 == 0 ? BadPartType::I : BadPartType::II;
}

YoungDiagram bv_dual(const OrbitSpec& spec) {
  validate_orbit_spec(spec);
  const YoungDiagram t = spec.d.transpose();
  std::vector<int> rows = t.rows();
  switch (real_pattern(spec.star)) {
    case Label::AR:
    case Label::AH:
    case Label::A:
    case Label::At:
      return t;
    case Label::B:
      if (rows.empty())
        rows.push_back(1);
      else
        ++rows[0];
      return collapse(YoungDiagram(std::move(rows)), Family::B);
    case Label::C:
    case Label::Cstar:
      --rows.back();  // |d| odd, so t is nonempty
      return collapse(YoungDiagram(std::move(rows)), Family::C);
    case Label::Ct:
      // Metaplectic dual: the half-integral infinitesimal character shifts
      // the recipe by one box in and one box out.
      if (rows.empty())
        return YoungDiagram();
      ++rows[0];
      --rows.back();
      return collapse(YoungDiagram(std::move(rows)), Family::C);
    case Label::D:
    case Label::Dstar:
      return collapse(t, Family::D);
    default:
      throw WrongLabel(std::string(label_name(spec.star)));
  }
}

}  // namespace unip
