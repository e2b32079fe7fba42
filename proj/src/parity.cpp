#include "unip/parity.hpp"

#include "unip/duality.hpp"

namespace unip {

bool good_parity(int k, Label star, int n) {
  int residue;
  switch (real_pattern(star)) {
    case Label::AR:
    case Label::AH:
    case Label::A:
      residue = n % 2;
      break;
    case Label::At:
      residue = (n + 1) % 2;
      break;
    case Label::C:
    case Label::Cstar:
    case Label::D:
    case Label::Dstar:
      residue = 1;
      break;
    case Label::B:
    case Label::Ct:
      residue = 0;
      break;
    default:
      throw WrongLabel(std::string(label_name(star)));
  }
  return ((k % 2) + 2) % 2 == residue;
}

ParitySplit split_parity(const OrbitSpec& spec) {
  validate_orbit_spec(spec);
  const int n = spec.d.size();  // rank proxy for the GL family
  std::vector<int> good_rows, bad_rows;
  for (int row : spec.d.rows())
    (good_parity(row, spec.star, n) ? good_rows : bad_rows).push_back(row);

  ParitySplit split;
  split.good = YoungDiagram(std::move(good_rows));
  split.bad = YoungDiagram(std::move(bad_rows));

  bool even_mults = true;
  std::vector<int> half;
  const auto& bad = split.bad.rows();
  for (size_t i = 0; i < bad.size();) {
    size_t j = i;
    while (j < bad.size() && bad[j] == bad[i]) ++j;
    if ((j - i) % 2 != 0) even_mults = false;
    for (size_t k = 0; k < (j - i) / 2; ++k) half.push_back(bad[i]);
    i = j;
  }
  if (even_mults) {
    split.bad_half = YoungDiagram(std::move(half));
    split.n_b = split.bad_half->size();
  }

  switch (dual_family(spec.star)) {
    case Family::GL: split.n_g = split.good.size(); break;
    case Family::B: split.n_g = (split.good.size() - 1) / 2; break;
    case Family::C:
    case Family::D: split.n_g = split.good.size() / 2; break;
  }
  return split;
}

bool analytically_even(const OrbitSpec& spec) {
  if (real_pattern(spec.star) == Label::At) {
    const auto& rows = spec.d.rows();
    for (int row : rows)
      if (row % 2 != rows.front() % 2) return false;
    return true;
  }
  return split_parity(spec).bad.empty();
}

bool relevance(const GroupForm& group, const OrbitSpec& spec) {
  if (group.label != spec.star) throw WrongLabel("group and orbit labels differ");
  const ParitySplit split = split_parity(spec);
  if (!split.bad_half) return false;
  switch (real_pattern(spec.star)) {
    case Label::B:
    case Label::D:
    case Label::Cstar:
      return group.p >= split.n_b && group.q >= split.n_b;
    case Label::C:
    case Label::Ct:
      return true;
    case Label::Dstar:
      if (is_very_even(spec) && !spec.d.empty() &&
          bad_part_type(spec.star, split.bad, spec.variant) == BadPartType::II)
        return false;
      return true;
    default:
      throw WrongLabel("relevance applies to the B/C/D labels only");
  }
}

}  // namespace unip
