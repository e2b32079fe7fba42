#include "unip/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace unip {

BivariatePoly BivariatePoly::constant(long long value) { return monomial(0, 0, value); }

BivariatePoly BivariatePoly::monomial(int pe, int qe, BigInt coeff) {
  BivariatePoly out;
  if (coeff != 0) out.terms_[{pe, qe}] = std::move(coeff);
  return out;
}

BigInt BivariatePoly::coefficient(int pe, int qe) const {
  auto it = terms_.find({pe, qe});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt BivariatePoly::eval_ones() const {
  BigInt sum = 0;
  for (const auto& [key, coeff] : terms_) sum += coeff;
  return sum;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [key, coeff] : other.terms_) {
    BigInt& slot = terms_[key];
    slot += coeff;
    if (slot == 0) terms_.erase(key);
  }
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      BivariatePoly::Key key{ka.first + kb.first, ka.second + kb.second};
      BigInt& slot = out.terms_[key];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(key);
    }
  return out;
}

std::string to_string(const BivariatePoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<BivariatePoly::Key, BigInt>> sorted(f.terms().begin(), f.terms().end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : sorted) {
    if (!first) out << " + ";
    first = false;
    const auto [pe, qe] = key;
    const bool unit = coeff == 1 && (pe > 0 || qe > 0);
    if (!unit) out << coeff;
    if (pe > 0) {
      if (!unit) out << ' ';
      out << 'p';
      if (pe > 1) out << '^' << pe;
    }
    if (qe > 0) {
      if (pe > 0 || !unit) out << ' ';
      out << 'q';
      if (qe > 1) out << '^' << qe;
    }
  }
  return out.str();
}

BivariatePoly nu(int k) {
  BivariatePoly out;
  for (int i = 0; i <= k; ++i) out += BivariatePoly::monomial(2 * i, 2 * (k - i));
  return out;
}

}  // namespace unip
