#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Mask polynomials of integer sets and divisibility by cyclotomics.
 */

#include "ztile/integer_set.hpp"
#include "ztile/numtheory.hpp"
#include "ztile/polynomial.hpp"

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace ztile {

using IntPolynomial = Polynomial<Integer>;

/// A(x) = sum of x^(a - min A), so the constant term is always 1.
inline IntPolynomial mask_poly(const IntegerSet& set) {
  require(!set.empty(), "mask polynomial of an empty set");
  const std::int64_t lo = set.min();
  std::vector<Integer> c(static_cast<std::size_t>(set.max() - lo) + 1, Integer(0));
  for (auto a : set) c[static_cast<std::size_t>(a - lo)] = 1;
  return IntPolynomial(std::move(c));
}

namespace detail {

struct CyclotomicTable {
  std::shared_mutex mutex;
  std::unordered_map<std::int64_t, IntPolynomial> table;
};

inline CyclotomicTable& cyclotomic_table() {
  static CyclotomicTable instance;
  return instance;
}

}  // namespace detail

/// Phi_d(x): x^d - 1 divided in turn by Phi_e for each proper divisor e of d.
/// Results are memoized; the returned reference stays valid for the process.
inline const IntPolynomial& cyclotomic(std::int64_t d) {
  require(d >= 1, "cyclotomic index must be positive");
  auto& memo = detail::cyclotomic_table();
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.table.find(d); it != memo.table.end()) return it->second;
  }
  IntPolynomial phi = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d));
  for (auto e : divisors(d)) {
    if (e == d) break;
    auto q = exact_divide(phi, cyclotomic(e));
    require(q.has_value(), "internal error: cyclotomic division not exact");
    phi = std::move(*q);
  }
  std::unique_lock lock(memo.mutex);
  return memo.table.try_emplace(d, std::move(phi)).first->second;
}

/// Phi_s(1): p when s is a power of the prime p, otherwise 1.
inline std::int64_t phi_at_one(std::int64_t s) {
  require(s >= 2, "phi_at_one requires s >= 2");
  Factorization f(s);
  return f.is_prime_power() ? f.factors().front().prime : 1;
}

/// Phi_d divides f in Z[x].
inline bool divides_cyclotomic(const IntPolynomial& f, std::int64_t d) {
  require(d >= 1, "cyclotomic index must be positive");
  // Phi_d | x^d - 1, so reducing mod x^d - 1 first preserves the remainder.
  return remainder_monic(fold_cyclic(f, static_cast<std::size_t>(d)), cyclotomic(d)).is_zero();
}

/// Phi_d divides the mask polynomial of the set.
inline bool divides_cyclotomic(const IntegerSet& set, std::int64_t d) {
  require(!set.empty(), "divisibility test on an empty set");
  require(d >= 1, "cyclotomic index must be positive");
  std::vector<Integer> folded(static_cast<std::size_t>(d), Integer(0));
  for (auto a : set) folded[static_cast<std::size_t>(mod_floor(a - set.min(), d))] += 1;
  return remainder_monic(IntPolynomial(std::move(folded)), cyclotomic(d)).is_zero();
}

/// Prime powers s with phi(s) <= deg A, the only candidates for Phi_s | A(x).
inline std::vector<std::int64_t> prime_power_candidates(const IntegerSet& set) {
  const std::int64_t degree = set.diameter();
  std::vector<std::int64_t> out;
  // phi(p^k) >= p^k / 2, so every candidate is at most 2 * degree.
  for (std::int64_t s = 2; s <= 2 * degree; ++s)
    if (is_prime_power(s) && euler_phi(s) <= degree) out.push_back(s);
  return out;
}

/// S_A: the prime powers s with Phi_s dividing A(x), ascending.
inline std::vector<std::int64_t> cyclotomic_support_prime_powers(const IntegerSet& set) {
  require(!set.empty(), "cyclotomic support of an empty set");
  std::vector<std::int64_t> out;
  for (auto s : prime_power_candidates(set))
    if (divides_cyclotomic(set, s)) out.push_back(s);
  return out;
}

}  // namespace ztile
