#pragma once

/**
 * @file tiling.hpp
 * @brief Verification of tilings A + B = Z/MZ and the conditions around them.
 *
 * is_tiling counts residues directly and is the ground truth. The cyclotomic
 * form (is_tiling_poly) and the divisor-set form (sands_criterion) are
 * independent routes to the same answer.
 */

#include "ztile/cyclotomic.hpp"
#include "ztile/integer_set.hpp"
#include "ztile/numtheory.hpp"
#include "ztile/spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ztile {

/// Every residue mod M is hit exactly once by a + b.
inline bool is_tiling(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  require(!a.empty() && !b.empty(), "tiling check on an empty set");
  require(modulus >= 1, "modulus must be positive");
  if (static_cast<std::int64_t>(a.size() * b.size()) != modulus) return false;
  std::vector<char> hit(static_cast<std::size_t>(modulus), 0);
  for (auto x : a)
    for (auto y : b) {
      auto& slot = hit[static_cast<std::size_t>(mod_floor(mod_floor(x, modulus) + mod_floor(y, modulus), modulus))];
      if (slot) return false;
      slot = 1;
    }
  return true;
}

/// |A||B| = M and Phi_s | A(x)B(x) for every s | M other than 1.
inline bool is_tiling_poly(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  require(!a.empty() && !b.empty(), "tiling check on an empty set");
  require(modulus >= 1, "modulus must be positive");
  if (static_cast<std::int64_t>(a.size() * b.size()) != modulus) return false;
  // A(x)B(x) with both masks normalized; the product of mask polynomials is
  // accumulated pair by pair since both factors are 0/1 and sparse.
  std::vector<Integer> product(static_cast<std::size_t>(a.diameter() + b.diameter()) + 1, Integer(0));
  for (auto x : a)
    for (auto y : b) product[static_cast<std::size_t>((x - a.min()) + (y - b.min()))] += 1;
  const IntPolynomial ab(std::move(product));
  for (auto s : divisors(modulus)) {
    if (s == 1) continue;
    if (!divides_cyclotomic(ab, s)) return false;
  }
  return true;
}

struct ConditionT1 {
  bool holds = false;
  Integer lhs;  // |A|
  Integer rhs;  // product of Phi_s(1) over S_A
  std::vector<std::int64_t> support;
};

inline ConditionT1 check_T1(const IntegerSet& set) {
  ConditionT1 out;
  out.support = cyclotomic_support_prime_powers(set);
  out.lhs = set.size();
  out.rhs = 1;
  for (auto s : out.support) out.rhs *= phi_at_one(s);
  out.holds = out.lhs == out.rhs;
  return out;
}

struct ConditionT2 {
  bool holds = false;
  std::vector<std::int64_t> support;
  /// Products of prime powers of distinct primes whose cyclotomic does not divide A(x).
  std::vector<std::int64_t> witnesses;
  std::size_t products_checked = 0;
};

/// Products s_1 ... s_k (k >= 2) of elements of `support` that are powers of
/// pairwise distinct primes, ascending.
inline std::vector<std::int64_t> coprime_support_products(const std::vector<std::int64_t>& support) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (auto s : support) by_prime[Factorization(s).factors().front().prime].push_back(s);
  struct Partial {
    std::int64_t product;
    int factors;
  };
  std::vector<Partial> partials{{1, 0}};
  for (const auto& [prime, powers] : by_prime) {
    std::vector<Partial> next = partials;  // skipping this prime
    for (const auto& p : partials)
      for (auto s : powers) next.push_back({p.product * s, p.factors + 1});
    partials = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (const auto& p : partials)
    if (p.factors >= 2) out.push_back(p.product);
  std::sort(out.begin(), out.end());
  return out;
}

inline ConditionT2 check_T2(const IntegerSet& set) {
  ConditionT2 out;
  out.support = cyclotomic_support_prime_powers(set);
  for (auto s : coprime_support_products(out.support)) {
    ++out.products_checked;
    if (!divides_cyclotomic(set, s)) out.witnesses.push_back(s);
  }
  out.holds = out.witnesses.empty();
  return out;
}

struct SandsResult {
  bool disjoint = false;
  bool product_is_M = false;
  std::vector<std::int64_t> divisors_a;
  std::vector<std::int64_t> divisors_b;

  bool tiles() const { return disjoint && product_is_M; }
};

/// D_A and D_B at modulus M and whether they are disjoint.
inline SandsResult sands_criterion(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  require(!a.empty() && !b.empty(), "Sands criterion on an empty set");
  require(modulus >= 1, "modulus must be positive");
  require(distinct_mod(a, modulus), "elements of A are not distinct modulo " + std::to_string(modulus));
  require(distinct_mod(b, modulus), "elements of B are not distinct modulo " + std::to_string(modulus));
  SandsResult out;
  out.divisors_a = difference_divisors(a, modulus);
  out.divisors_b = difference_divisors(b, modulus);
  std::vector<std::int64_t> common;
  std::set_intersection(out.divisors_a.begin(), out.divisors_a.end(), out.divisors_b.begin(),
                        out.divisors_b.end(), std::back_inserter(common));
  out.disjoint = common.empty();
  out.product_is_M = static_cast<std::int64_t>(a.size() * b.size()) == modulus;
  return out;
}

struct DivisorBound {
  bool bound_holds = false;        // |A||B| <= M
  bool is_equality = false;        // |A||B| == M
  bool tiling = false;             // is_tiling(A, B, M)
  bool equality_iff_tiling = false;
};

/// For D_A and D_B disjoint: |A||B| <= M, with equality exactly for tilings.
inline DivisorBound divisor_bound_check(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  const auto sands = sands_criterion(a, b, modulus);
  require(sands.disjoint, "D_A and D_B are not disjoint");
  DivisorBound out;
  const auto product = static_cast<std::int64_t>(a.size() * b.size());
  out.bound_holds = product <= modulus;
  out.is_equality = product == modulus;
  out.tiling = is_tiling(a, b, modulus);
  out.equality_iff_tiling = out.is_equality == out.tiling;
  return out;
}

struct DecompositionResult {
  std::int64_t prime = 0;
  std::vector<std::int64_t> offsets;   // a_i = min of the class i mod p
  std::vector<IntegerSet> parts;       // (A^(i) - a_i) / p
  IntegerSet reduced_complement;       // B / p
  std::int64_t reduced_modulus = 0;    // M / p

  bool equal_cardinality = false;      // every part has |A| / p elements
  bool parts_tile = false;             // each part tiles with B / p mod M / p
  bool equal_support = false;          // all parts share the same S
  bool support_decomposes = false;     // S_A = {p} + S of p * part 0

  bool valid() const { return equal_cardinality && parts_tile && equal_support && support_decomposes; }
};

/// Splits a tiling with B inside pZ into p tilings of Z/(M/p)Z.
inline DecompositionResult decompose_tiling(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus,
                                            std::int64_t p) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(modulus >= 1 && modulus % p == 0, std::to_string(p) + " does not divide M");
  for (auto y : b) require(y % p == 0, "B is not contained in " + std::to_string(p) + "Z");
  require(is_tiling(a, b, modulus), "A and B do not tile Z/" + std::to_string(modulus) + "Z");

  DecompositionResult out;
  out.prime = p;
  out.reduced_modulus = modulus / p;
  std::vector<std::int64_t> scaled_b;
  for (auto y : b) scaled_b.push_back(y / p);
  out.reduced_complement = IntegerSet(std::move(scaled_b));

  std::vector<std::vector<std::int64_t>> classes(static_cast<std::size_t>(p));
  for (auto x : a) classes[static_cast<std::size_t>(mod_floor(x, p))].push_back(x);
  for (auto& cls : classes) {
    if (cls.empty()) {
      out.offsets.push_back(0);
      out.parts.emplace_back();
      continue;
    }
    const std::int64_t lo = *std::min_element(cls.begin(), cls.end());
    for (auto& x : cls) x = (x - lo) / p;
    out.offsets.push_back(lo);
    out.parts.emplace_back(std::move(cls));
  }

  const std::size_t expected = a.size() / static_cast<std::size_t>(p);
  out.equal_cardinality = a.size() % static_cast<std::size_t>(p) == 0 &&
                          std::all_of(out.parts.begin(), out.parts.end(),
                                      [&](const IntegerSet& s) { return s.size() == expected; });
  if (!out.equal_cardinality) return out;

  out.parts_tile = std::all_of(out.parts.begin(), out.parts.end(), [&](const IntegerSet& s) {
    return is_tiling(s, out.reduced_complement, out.reduced_modulus);
  });

  const auto support0 = cyclotomic_support_prime_powers(out.parts.front());
  out.equal_support = std::all_of(out.parts.begin(), out.parts.end(), [&](const IntegerSet& s) {
    return cyclotomic_support_prime_powers(s) == support0;
  });

  auto expected_support = cyclotomic_support_prime_powers(out.parts.front().dilated(p));
  expected_support.push_back(p);
  std::sort(expected_support.begin(), expected_support.end());
  expected_support.erase(std::unique(expected_support.begin(), expected_support.end()), expected_support.end());
  out.support_decomposes = cyclotomic_support_prime_powers(a) == expected_support;
  return out;
}

}  // namespace ztile
