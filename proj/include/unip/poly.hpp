#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace unip {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in the indeterminates p and q.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (p-exponent, q-exponent)

  BivariatePoly() = default;
  static BivariatePoly constant(long long value);
  static BivariatePoly monomial(int pe, int qe, BigInt coeff = 1);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int pe, int qe) const;
  BigInt eval_ones() const;  // value at p = q = 1
  bool is_zero() const { return terms_.empty(); }

  BivariatePoly& operator+=(const BivariatePoly& other);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  std::map<Key, BigInt> terms_;  // no zero coefficients stored
};

/// Canonical text: total degree ascending, then p-exponent descending,
/// e.g. "p^3 + 2 p^2 q + 2 p q^2 + q^3". The zero polynomial prints "0".
std::string to_string(const BivariatePoly& f);

/// nu_k = sum_{i=0..k} p^{2i} q^{2(k-i)}; zero for k < 0.
BivariatePoly nu(int k);

}  // namespace unip
