#pragma once

/**
 * @file spectra.hpp
 * @brief Difference and power spectra of integer sets relative to a modulus N.
 *
 * For a modulus N the difference spectrum counts ordered pairs (a, a') by
 * gcd(a - a', N); the power spectrum sums |A(xi)|^2 over the primitive d-th
 * roots of unity for each d | N. Power spectra are evaluated with Ramanujan
 * sums, so both sides of the identity linking them are exact integers.
 */

#include "ztile/integer_set.hpp"
#include "ztile/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace ztile {

/// Values indexed by the divisors of a modulus, ascending.
template <class Value>
struct DivisorIndexed {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> divisors;
  std::vector<Value> values;

  DivisorIndexed() = default;
  explicit DivisorIndexed(std::int64_t n)
      : modulus(n), divisors(ztile::divisors(n)), values(divisors.size(), Value(0)) {}

  std::size_t index_of(std::int64_t m) const {
    auto it = std::lower_bound(divisors.begin(), divisors.end(), m);
    require(it != divisors.end() && *it == m,
            std::to_string(m) + " does not divide " + std::to_string(modulus));
    return static_cast<std::size_t>(it - divisors.begin());
  }

  const Value& at(std::int64_t m) const { return values[index_of(m)]; }
  Value& at(std::int64_t m) { return values[index_of(m)]; }
  std::size_t size() const { return divisors.size(); }
};

struct DifferenceSpectrum : DivisorIndexed<Integer> {
  using DivisorIndexed::DivisorIndexed;
  /// gcd(a - a', N) over pairs with a != a', ascending.
  std::vector<std::int64_t> divisor_set;
};

using PowerSpectrum = DivisorIndexed<Integer>;
using AlphaSpectrum = DivisorIndexed<Rational>;
using ResidueClassCounts = DivisorIndexed<Integer>;

inline DifferenceSpectrum difference_spectrum(const IntegerSet& set, std::int64_t modulus) {
  require(!set.empty(), "difference spectrum of an empty set");
  require(modulus >= 1, "modulus must be positive");
  DifferenceSpectrum out(modulus);
  std::vector<std::int64_t> counts(out.size(), 0);
  std::vector<bool> off_diagonal(out.size(), false);
  for (auto a : set)
    for (auto b : set) {
      const std::size_t idx = out.index_of(gcd_conv(modulus, a - b));
      ++counts[idx];
      if (a != b) off_diagonal[idx] = true;
    }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] = counts[i];
    if (off_diagonal[i]) out.divisor_set.push_back(out.divisors[i]);
  }
  return out;
}

/// The divisor set D at the given modulus without the full spectrum.
inline std::vector<std::int64_t> difference_divisors(const IntegerSet& set, std::int64_t modulus) {
  return difference_spectrum(set, modulus).divisor_set;
}

/// Power spectrum value for one d: sum over ordered pairs of c_d(a - a').
inline Integer power_spectrum_value(const IntegerSet& set, std::int64_t d) {
  require(!set.empty(), "power spectrum of an empty set");
  require(d >= 1, "spectrum index must be positive");
  // Histogram of differences mod d, then one Ramanujan sum per gcd class.
  std::vector<std::int64_t> by_residue(static_cast<std::size_t>(d), 0);
  for (auto a : set)
    for (auto b : set) ++by_residue[static_cast<std::size_t>(mod_floor(a - b, d))];
  std::vector<std::int64_t> by_gcd(static_cast<std::size_t>(d) + 1, 0);
  for (std::int64_t r = 0; r < d; ++r)
    if (by_residue[static_cast<std::size_t>(r)] != 0)
      by_gcd[static_cast<std::size_t>(gcd_conv(d, r))] += by_residue[static_cast<std::size_t>(r)];
  Integer total = 0;
  for (auto g : divisors(d))
    if (by_gcd[static_cast<std::size_t>(g)] != 0)
      total += Integer(by_gcd[static_cast<std::size_t>(g)]) * ramanujan_sum(d, g);
  return total;
}

inline PowerSpectrum power_spectrum(const IntegerSet& set, std::int64_t modulus) {
  require(modulus >= 1, "modulus must be positive");
  PowerSpectrum out(modulus);
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = power_spectrum_value(set, out.divisors[i]);
  return out;
}

inline AlphaSpectrum alpha_spectrum(const DifferenceSpectrum& spectrum) {
  AlphaSpectrum out(spectrum.modulus);
  for (std::size_t i = 0; i < out.size(); ++i)
    out.values[i] = ratio(spectrum.values[i], euler_phi(spectrum.modulus / out.divisors[i]));
  return out;
}

/// alpha_m = A_m / phi(N/m)
inline AlphaSpectrum alpha_spectrum(const IntegerSet& set, std::int64_t modulus) {
  return alpha_spectrum(difference_spectrum(set, modulus));
}

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// Both sides of
///   sum_{m|N} A_m B_m / phi(N/m) = (1/N) sum_{d|N} PA_d PB_d / phi(d)
/// evaluated independently in exact rationals.
inline IdentityCheck verify_main_identity(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  const auto da = difference_spectrum(a, modulus);
  const auto db = difference_spectrum(b, modulus);
  const auto pa = power_spectrum(a, modulus);
  const auto pb = power_spectrum(b, modulus);
  IdentityCheck out;
  for (std::size_t i = 0; i < da.size(); ++i) {
    const std::int64_t m = da.divisors[i];
    out.lhs += ratio(da.values[i] * db.values[i], euler_phi(modulus / m));
    out.rhs += ratio(pa.values[i] * pb.values[i], euler_phi(m));
  }
  out.rhs /= modulus;
  out.equal = out.lhs == out.rhs;
  return out;
}

/// b_m(c) = #{b in B : gcd(b - c, N) = m}
inline ResidueClassCounts residue_class_counts(const IntegerSet& set, std::int64_t c, std::int64_t modulus) {
  require(modulus >= 1, "modulus must be positive");
  ResidueClassCounts out(modulus);
  for (auto b : set) out.at(gcd_conv(modulus, b - c)) += 1;
  return out;
}

/// sum_{m|N} b_m(c) A_m / phi(N/m) from a precomputed spectrum of A at N.
inline Rational corollary_constant(const DifferenceSpectrum& spectrum_a, const IntegerSet& b,
                                   std::int64_t c) {
  require(!b.contains(c), "c = " + std::to_string(c) + " lies in B");
  const std::int64_t n = spectrum_a.modulus;
  const auto counts = residue_class_counts(b, c, n);
  Rational total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts.values[i] != 0 && spectrum_a.values[i] != 0)
      total += ratio(counts.values[i] * spectrum_a.values[i], euler_phi(n / counts.divisors[i]));
  return total;
}

/// Repeated evaluation of the corollary sum for one A and N over many c.
///
/// Every term b_m A_m / phi(N/m) is rescaled to the common denominator
/// D = lcm of phi(N/m), so an evaluation is a sum of exact integers and two
/// values are equal exactly when their scaled numerators are.
class CorollarySweep {
 public:
  explicit CorollarySweep(const DifferenceSpectrum& spectrum_a)
      : modulus_(spectrum_a.modulus), slot_(static_cast<std::size_t>(spectrum_a.modulus) + 1, 0) {
    for (std::size_t i = 0; i < spectrum_a.size(); ++i) {
      const std::int64_t m = spectrum_a.divisors[i];
      denominator_ = std::lcm(denominator_, euler_phi(modulus_ / m));
      slot_[static_cast<std::size_t>(m)] = i;
    }
    for (std::size_t i = 0; i < spectrum_a.size(); ++i)
      weights_.push_back(spectrum_a.values[i] * (denominator_ / euler_phi(modulus_ / spectrum_a.divisors[i])));
  }

  std::int64_t denominator() const { return denominator_; }

  /// The corollary sum times denominator().
  Integer scaled_value(const IntegerSet& b, std::int64_t c) const {
    require(!b.contains(c), "c = " + std::to_string(c) + " lies in B");
    Integer total = 0;
    for (auto y : b) total += weights_[slot_[static_cast<std::size_t>(std::gcd(modulus_, y - c))]];
    return total;
  }

  Rational value(const IntegerSet& b, std::int64_t c) const { return ratio(scaled_value(b, c), denominator_); }

 private:
  std::int64_t modulus_;
  std::int64_t denominator_ = 1;
  std::vector<std::size_t> slot_;  // divisor value -> index
  std::vector<Integer> weights_;
};

/// Value that is independent of c for tilings A + B = Z/MZ and every N | M.
/// The tiling hypothesis itself is the caller's to establish.
inline Rational corollary_constant(const IntegerSet& a, const IntegerSet& b, std::int64_t big_modulus,
                                   std::int64_t modulus, std::int64_t c) {
  require(big_modulus >= 1 && modulus >= 1, "moduli must be positive");
  require(big_modulus % modulus == 0,
          std::to_string(modulus) + " does not divide " + std::to_string(big_modulus));
  require(!b.contains(c), "c = " + std::to_string(c) + " lies in B");
  return corollary_constant(difference_spectrum(a, modulus), b, c);
}

}  // namespace ztile
