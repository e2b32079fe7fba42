#include "unip/realforms.hpp"

#include <vector>

namespace unip {

namespace {

struct LengthClass {
  int length = 0;
  int mult = 0;
};

std::vector<LengthClass> length_classes(const YoungDiagram& shape) {
  std::vector<LengthClass> out;
  const auto& rows = shape.rows();
  for (size_t i = 0; i < rows.size();) {
    size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    out.push_back({rows[i], static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

// DP over length classes: ways[plus_boxes] = number of sign arrangements.
using SignDp = std::vector<long long>;

void convolve(SignDp& dp, const std::vector<std::pair<int, long long>>& options, int limit) {
  SignDp next(limit + 1, 0);
  for (int p = 0; p <= limit; ++p) {
    if (!dp[p]) continue;
    for (const auto& [plus, ways] : options)
      if (p + plus <= limit) next[p + plus] += dp[p] * ways;
  }
  dp = std::move(next);
}

}  // namespace

long long count_real_orbits(const GroupForm& group, const YoungDiagram& shape) {
  const Label pattern = real_pattern(group.label);
  const int total = shape.size();
  if (pattern == Label::A || pattern == Label::At) {
    if (total != group.p + group.q) throw InvalidOrbit("shape size must equal p+q");
    // Alternating rows, free leading sign, rows of equal length unordered.
    SignDp dp(total + 1, 0);
    dp[0] = 1;
    for (const auto& cls : length_classes(shape)) {
      const int plus_lead = (cls.length + 1) / 2;
      const int minus_lead = cls.length / 2;
      std::vector<std::pair<int, long long>> options;
      for (int k = 0; k <= cls.mult; ++k)
        options.emplace_back(k * plus_lead + (cls.mult - k) * minus_lead, 1);
      convolve(dp, options, total);
    }
    return dp[group.p];
  }
  if (pattern == Label::Cstar) {
    // sp(p/2,q/2): even rows pair off with opposite leading signs; odd rows
    // carry free leading signs; signature (p,q) in boxes.
    if (!is_valid_orbit(shape, Family::C)) throw InvalidOrbit(to_string(shape));
    if (total != group.p + group.q) throw InvalidOrbit("shape size must equal p+q");
    SignDp dp(total + 1, 0);
    dp[0] = 1;
    for (const auto& cls : length_classes(shape)) {
      std::vector<std::pair<int, long long>> options;
      if (cls.length % 2 == 0) {
        if (cls.mult % 2 != 0) return 0;
        options.emplace_back(cls.mult * cls.length / 2, 1);
      } else {
        const int plus_lead = (cls.length + 1) / 2;
        const int minus_lead = cls.length / 2;
        for (int k = 0; k <= cls.mult; ++k)
          options.emplace_back(k * plus_lead + (cls.mult - k) * minus_lead, 1);
      }
      convolve(dp, options, total);
    }
    return dp[group.p];
  }
  if (pattern == Label::Dstar) {
    // so*(2n): odd rows pair off with opposite leading signs; even rows pair
    // off with identical leading signs, the shared sign free per pair.
    if (!is_valid_orbit(shape, Family::D)) throw InvalidOrbit(to_string(shape));
    if (total != 2 * group.n) throw InvalidOrbit("shape size must equal 2n");
    long long count = 1;
    for (const auto& cls : length_classes(shape)) {
      if (cls.mult % 2 != 0) return 0;
      if (cls.length % 2 == 0) count *= cls.mult / 2 + 1;
    }
    return count;
  }
  throw WrongLabel("real-orbit counting supports U(p,q), Sp(p/2,q/2), SO*(2n)");
}

}  // namespace unip
