#pragma once

/**
 * @file numtheory.hpp
 * @brief Exact elementary number theory used throughout ztile.
 *
 * Set elements and moduli are machine integers (bounded, see IntegerSet);
 * every accumulated quantity (counts, spectra, sums of products, rationals)
 * is carried in arbitrary precision so no intermediate can overflow.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ztile {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation is called outside its domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw precondition_error(message);
}

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  std::int64_t value() const {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v *= prime;
    return v;
  }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
class Factorization {
 public:
  Factorization() = default;

  /// Deterministic trial division up to sqrt(n).
  explicit Factorization(std::int64_t n) {
    require(n >= 1, "factorization requires n >= 1");
    for (std::int64_t p = 2; p <= n / p; ++p) {
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors_.push_back({p, e});
    }
    if (n > 1) factors_.push_back({n, 1});
  }

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t distinct_primes() const { return factors_.size(); }
  bool is_prime_power() const { return factors_.size() == 1; }
  bool squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
  }

  std::int64_t value() const {
    std::int64_t v = 1;
    for (const auto& f : factors_) v *= f.value();
    return v;
  }

  int exponent_of(std::int64_t prime) const {
    for (const auto& f : factors_)
      if (f.prime == prime) return f.exponent;
    return 0;
  }

 private:
  std::vector<PrimePower> factors_;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_power(std::int64_t n) {
  return n >= 2 && Factorization(n).is_prime_power();
}

inline std::int64_t euler_phi(std::int64_t n) {
  require(n >= 1, "euler_phi requires n >= 1");
  std::int64_t result = n;
  const Factorization fac(n);
  for (const auto& f : fac.factors()) result = result / f.prime * (f.prime - 1);
  return result;
}

inline int moebius(std::int64_t n) {
  require(n >= 1, "moebius requires n >= 1");
  Factorization f(n);
  if (!f.squarefree()) return 0;
  return f.distinct_primes() % 2 == 0 ? 1 : -1;
}

/// gcd(|n|, |t|) with the convention (n, 0) = |n|.
inline std::int64_t gcd_conv(std::int64_t n, std::int64_t t) {
  require(n != 0, "gcd_conv requires n != 0");
  return std::gcd(n, t);  // std::gcd already works on absolute values
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  require(n >= 1, "divisors requires n >= 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// Ramanujan sum c_d(n): the sum of xi^n over the primitive d-th roots of unity.
inline std::int64_t ramanujan_sum(std::int64_t d, std::int64_t n) {
  require(d >= 1, "ramanujan_sum requires d >= 1");
  const std::int64_t g = gcd_conv(d, n);
  const std::int64_t k = d / g;
  return moebius(k) * (euler_phi(d) / euler_phi(k));
}

/// num / den in lowest terms. Rational(x, y) with mixed argument types can
/// select a precision constructor instead, so quotients are built here.
inline Rational ratio(const Integer& num, const Integer& den) {
  require(den != 0, "zero denominator");
  return Rational(num) / Rational(den);
}

/// Renders a rational in lowest terms as "p/q", or "p" when integral.
inline std::string to_string(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace ztile
