#pragma once

/**
 * @file threeprime.hpp
 * @brief Structure of tilings whose complement has cardinality pqr.
 *
 * Residues mod pqr are identified with coordinate triples (n mod p, n mod q,
 * n mod r). [i,j,k] denotes one residue class, and '*' a free coordinate, so
 * [i,*,*] is a plane and [i,j,*] a line.
 */

#include "ztile/cyclotomic.hpp"
#include "ztile/integer_set.hpp"
#include "ztile/numtheory.hpp"
#include "ztile/spectra.hpp"
#include "ztile/tiling.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ztile {

using Coordinates = std::array<std::int64_t, 3>;

/// Three distinct primes and the CRT coordinates they induce.
class ResidueCoordinates {
 public:
  ResidueCoordinates(std::int64_t p, std::int64_t q, std::int64_t r) : primes_{p, q, r} {
    require(is_prime(p) && is_prime(q) && is_prime(r), "p, q, r must be prime");
    require(p != q && q != r && p != r, "p, q, r must be distinct");
  }

  std::int64_t p() const { return primes_[0]; }
  std::int64_t q() const { return primes_[1]; }
  std::int64_t r() const { return primes_[2]; }
  const std::array<std::int64_t, 3>& primes() const { return primes_; }
  std::int64_t modulus() const { return primes_[0] * primes_[1] * primes_[2]; }

  Coordinates of(std::int64_t n) const {
    return {mod_floor(n, primes_[0]), mod_floor(n, primes_[1]), mod_floor(n, primes_[2])};
  }

  /// n_{i,j,k}: the representative in [0, pqr) of the class [i,j,k].
  std::int64_t representative(const Coordinates& c) const {
    const std::int64_t n = modulus();
    std::int64_t out = 0;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const std::int64_t m = primes_[axis];
      const std::int64_t rest = n / m;
      // rest * inverse(rest mod m) is 1 mod m and 0 mod the other primes
      std::int64_t inv = 1;
      while ((rest % m) * inv % m != 1 % m) ++inv;
      out = (out + mod_floor(c[axis], m) * (rest * inv % n)) % n;
    }
    return out;
  }

 private:
  std::array<std::int64_t, 3> primes_;
};

// Support classification ---------------------------------------------------

struct SupportClassification {
  bool case_axes = false;    // B in [*,j,k] + [i,*,k] + [i,j,*]
  bool case_tetra = false;   // B in [0,0,0] + [i,j,0] + [i,0,k] + [0,j,k]
  bool case_plane = false;   // B in one of [*,*,0], [*,0,*], [0,*,*]
  std::vector<Coordinates> axes_witnesses;
  std::vector<Coordinates> tetra_witnesses;
  std::array<bool, 3> planes{};  // [0,*,*], [*,0,*], [*,*,0]

  bool any() const { return case_axes || case_tetra || case_plane; }
};

struct HypothesisViolation {
  std::int64_t first = 0;
  std::int64_t second = 0;
};

using SupportResult = std::variant<SupportClassification, HypothesisViolation>;

/// Checks B - B inside pZ + qZ + rZ and reports every structural case it satisfies.
inline SupportResult classify_support(const IntegerSet& b, const ResidueCoordinates& rc) {
  require(b.contains(0), "classify_support requires 0 in B");
  for (auto x : b)
    for (auto y : b) {
      const std::int64_t d = x - y;
      if (d % rc.p() != 0 && d % rc.q() != 0 && d % rc.r() != 0) return HypothesisViolation{x, y};
    }

  std::vector<Coordinates> coords;
  for (auto x : b) coords.push_back(rc.of(x));

  SupportClassification out;
  for (std::int64_t i = 0; i < rc.p(); ++i)
    for (std::int64_t j = 0; j < rc.q(); ++j)
      for (std::int64_t k = 0; k < rc.r(); ++k) {
        const Coordinates w{i, j, k};
        // On one of the three lines through [i,j,k]: two coordinates agree with w.
        const bool axes = std::all_of(coords.begin(), coords.end(), [&](const Coordinates& c) {
          return (c[0] == i) + (c[1] == j) + (c[2] == k) >= 2;
        });
        const bool tetra = std::all_of(coords.begin(), coords.end(), [&](const Coordinates& c) {
          return c == Coordinates{0, 0, 0} || c == Coordinates{i, j, 0} || c == Coordinates{i, 0, k} ||
                 c == Coordinates{0, j, k};
        });
        if (axes) out.axes_witnesses.push_back(w);
        if (tetra) out.tetra_witnesses.push_back(w);
      }
  for (std::size_t axis = 0; axis < 3; ++axis)
    out.planes[axis] = std::all_of(coords.begin(), coords.end(), [&](const Coordinates& c) { return c[axis] == 0; });

  out.case_axes = !out.axes_witnesses.empty();
  out.case_tetra = !out.tetra_witnesses.empty();
  out.case_plane = out.planes[0] || out.planes[1] || out.planes[2];
  return out;
}

// Equidistribution ---------------------------------------------------------

struct PairCount {
  Integer count;
  Rational lower_bound;  // |A|^2 / m
  bool bound_holds = false;
  bool equidistributed = false;
};

/// Ordered pairs with m | a - a', against the lower bound |A|^2 / m.
inline PairCount count_pairs_divisible(const IntegerSet& a, std::int64_t m) {
  require(!a.empty(), "pair count on an empty set");
  require(m >= 1, "m must be positive");
  // Pairs with m | a - a' are the sum of squared residue class sizes.
  auto res = residues(a, m);
  std::sort(res.begin(), res.end());
  PairCount out;
  for (auto it = res.begin(); it != res.end();) {
    auto next = std::upper_bound(it, res.end(), *it);
    const Integer run = static_cast<std::int64_t>(next - it);
    out.count += run * run;
    it = next;
  }
  const Integer n = a.size();
  out.lower_bound = ratio(n * n, m);
  out.bound_holds = Rational(out.count) >= out.lower_bound;
  out.equidistributed = Rational(out.count) == out.lower_bound;
  return out;
}

// Relations among alpha_m at N = pqr ----------------------------------------

struct AlphaRelation {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct AlphaRelationReport {
  Rational level;  // L = |A|^2 / pqr
  AlphaSpectrum alpha;
  std::vector<AlphaRelation> relations;

  bool all_hold() const {
    return std::all_of(relations.begin(), relations.end(), [](const AlphaRelation& r) { return r.holds; });
  }
};

/// Linear relations the alpha_m satisfy when A(x) is divisible by the
/// claimed cyclotomics. `hypotheses` lists moduli among p, q, r and pr; each
/// is checked. p, q and r are required; pr unlocks the second family.
inline AlphaRelationReport verify_unif_relations(const IntegerSet& a, const ResidueCoordinates& rc,
                                                 const std::vector<std::int64_t>& hypotheses) {
  const std::int64_t p = rc.p(), q = rc.q(), r = rc.r();
  auto claimed = [&](std::int64_t h) { return std::find(hypotheses.begin(), hypotheses.end(), h) != hypotheses.end(); };
  for (auto h : hypotheses) {
    require(h == p || h == q || h == r || h == p * r,
            "hypothesis " + std::to_string(h) + " is not one of p, q, r, pr");
    require(divides_cyclotomic(a, h), "Phi_" + std::to_string(h) + " does not divide A(x)");
  }
  require(claimed(p) && claimed(q) && claimed(r), "relations need Phi_p, Phi_q and Phi_r among the hypotheses");

  AlphaRelationReport out;
  const std::int64_t n = p * q * r;
  out.alpha = alpha_spectrum(a, n);
  const Integer size = a.size();
  out.level = ratio(size * size, n);
  const Rational& level = out.level;
  auto al = [&](std::int64_t m) -> const Rational& { return out.alpha.at(m); };
  auto add = [&](std::string name, Rational lhs, Rational rhs) {
    const bool holds = lhs == rhs;
    out.relations.push_back({std::move(name), std::move(lhs), std::move(rhs), holds});
  };

  // Pairs divisible by one prime u, split by which of the others v, w also divide.
  struct Rotation {
    std::int64_t u, v, w;
    const char *nu, *nv, *nw;
  };
  const std::array<Rotation, 3> rotations{{{p, q, r, "p", "q", "r"}, {q, p, r, "q", "p", "r"}, {r, p, q, "r", "p", "q"}}};
  // Subscript names in p < q < r letter order.
  auto sub = [](std::string x, std::string y) { return x < y ? x + y : y + x; };
  for (const auto& [u, v, w, nu, nv, nw] : rotations)
    add(std::string("(") + nv + "-1)(" + nw + "-1)a_" + nu + "+(" + nw + "-1)a_" + sub(nu, nv) + "+(" + nv + "-1)a_" +
            sub(nu, nw) + "+a_pqr=" + sub(nv, nw) + "L",
        Rational((v - 1) * (w - 1)) * al(u) + Rational(w - 1) * al(u * v) + Rational(v - 1) * al(u * w) + al(n),
        Rational(v * w) * level);
  for (const auto& [u, v, w, nu, nv, nw] : rotations)
    add(std::string("(") + nv + "-1)(" + nw + "-1)a_1+(" + nw + "-1)a_" + nv + "+(" + nv + "-1)a_" + nw + "+a_" +
            sub(nv, nw) + "=" + sub(nv, nw) + "L",
        Rational((v - 1) * (w - 1)) * al(1) + Rational(w - 1) * al(v) + Rational(v - 1) * al(w) + al(v * w),
        Rational(v * w) * level);

  if (claimed(p * r)) {
    const Rational target = Rational(q) * level;
    add("(q-1)a_pr+a_pqr=qL", Rational(q - 1) * al(p * r) + al(n), target);
    add("(q-1)a_r+a_qr=qL", Rational(q - 1) * al(r) + al(q * r), target);
    add("(q-1)a_p+a_pq=qL", Rational(q - 1) * al(p) + al(p * q), target);
    add("(q-1)a_1+a_q=qL", Rational(q - 1) * al(1) + al(q), target);
  }
  return out;
}

// Axis-supported profiles --------------------------------------------------

struct UniformProfile {
  std::int64_t t = 0, x = 0, y = 0, z = 0;
  friend bool operator==(const UniformProfile&, const UniformProfile&) = default;
};

struct ThreePrimeProfile {
  std::int64_t t = 0;
  std::vector<std::int64_t> x, y, z;  // indexed by coordinate 1..p-1 (stored from 0)
  std::int64_t total_x = 0, total_y = 0, total_z = 0;
  bool uniform = false;

  std::int64_t cardinality() const { return t + total_x + total_y + total_z; }

  std::optional<UniformProfile> as_uniform() const {
    if (!uniform) return std::nullopt;
    return UniformProfile{t, x.front(), y.front(), z.front()};
  }
};

struct OffAxisWitness {
  std::int64_t element = 0;
  Coordinates coordinates{};
};

using ProfileResult = std::variant<ThreePrimeProfile, OffAxisWitness>;

/// Counts of B on [0,0,0] and on the three coordinate axes through it,
/// accumulated by residue class mod pqr.
inline ProfileResult structured_profile(const IntegerSet& b, const ResidueCoordinates& rc) {
  ThreePrimeProfile out;
  out.x.assign(static_cast<std::size_t>(rc.p() - 1), 0);
  out.y.assign(static_cast<std::size_t>(rc.q() - 1), 0);
  out.z.assign(static_cast<std::size_t>(rc.r() - 1), 0);
  for (auto e : b) {
    const auto c = rc.of(e);
    const int zeros = (c[0] == 0) + (c[1] == 0) + (c[2] == 0);
    if (zeros == 3)
      ++out.t;
    else if (zeros < 2)
      return OffAxisWitness{e, c};
    else if (c[0] != 0)
      ++out.x[static_cast<std::size_t>(c[0] - 1)];
    else if (c[1] != 0)
      ++out.y[static_cast<std::size_t>(c[1] - 1)];
    else
      ++out.z[static_cast<std::size_t>(c[2] - 1)];
  }
  auto sum = [](const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto e : v) s += e;
    return s;
  };
  auto flat = [](const std::vector<std::int64_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  out.total_x = sum(out.x);
  out.total_y = sum(out.y);
  out.total_z = sum(out.z);
  out.uniform = flat(out.x) && flat(out.y) && flat(out.z);
  return out;
}

/// The set realizing a uniform profile: class representatives n_{i,j,k},
/// repeated at n_{i,j,k} + pqr*s when a class count exceeds one.
inline IntegerSet realizing_set(const UniformProfile& profile, const ResidueCoordinates& rc) {
  std::vector<std::int64_t> out;
  auto put = [&](const Coordinates& c, std::int64_t count) {
    const std::int64_t base = rc.representative(c);
    for (std::int64_t s = 0; s < count; ++s) out.push_back(base + rc.modulus() * s);
  };
  put({0, 0, 0}, profile.t);
  for (std::int64_t i = 1; i < rc.p(); ++i) put({i, 0, 0}, profile.x);
  for (std::int64_t j = 1; j < rc.q(); ++j) put({0, j, 0}, profile.y);
  for (std::int64_t k = 1; k < rc.r(); ++k) put({0, 0, k}, profile.z);
  return IntegerSet(std::move(out));
}

struct ClosedFormCondition {
  std::int64_t index = 0;       // pq, qr, pr or pqr
  std::int64_t required_t = 0;  // t must equal this for Phi_index to divide
  bool holds = false;
  bool satisfiable = false;     // required_t >= 0
};

struct MembershipVerdicts {
  ClosedFormCondition pq, qr, pr, pqr;
  bool degenerate = false;  // x = y = z = 0

  std::array<const ClosedFormCondition*, 4> all() const { return {&pq, &qr, &pr, &pqr}; }
};

/// Closed-form divisibility of B(x) by Phi_pq, Phi_qr, Phi_pr, Phi_pqr for
/// a uniform axis-supported profile.
inline MembershipVerdicts structured_cyclotomic_membership(const UniformProfile& profile, const ResidueCoordinates& rc) {
  require(profile.t >= 0 && profile.x >= 0 && profile.y >= 0 && profile.z >= 0, "profile counts must be nonnegative");
  const std::int64_t p = rc.p(), q = rc.q(), r = rc.r();
  const std::int64_t base = profile.x + profile.y + profile.z;
  auto cond = [&](std::int64_t index, std::int64_t required) {
    return ClosedFormCondition{index, required, profile.t == required, required >= 0};
  };
  MembershipVerdicts out;
  out.pq = cond(p * q, base - profile.z * r);
  out.qr = cond(q * r, base - profile.x * p);
  out.pr = cond(p * r, base - profile.y * q);
  out.pqr = cond(p * q * r, base);
  out.degenerate = profile.x == 0 && profile.y == 0 && profile.z == 0;
  return out;
}

inline MembershipVerdicts structured_cyclotomic_membership(const ThreePrimeProfile& profile,
                                                           const ResidueCoordinates& rc) {
  const auto uniform = profile.as_uniform();
  require(uniform.has_value(), "profile is not uniform on the axes");
  return structured_cyclotomic_membership(*uniform, rc);
}

struct ExclusivityVerdict {
  bool pqr_excludes_pairwise = true;  // Phi_pqr condition rules out the other three
  bool at_most_one_pairwise = true;   // checked only when |B| = pqr
  bool pairwise_checked = false;

  bool consistent() const { return pqr_excludes_pairwise && at_most_one_pairwise; }
};

inline ExclusivityVerdict check_exclusivity(const UniformProfile& profile, const ResidueCoordinates& rc,
                                            bool cardinality_is_pqr) {
  require(profile.x >= 1 && profile.y >= 1 && profile.z >= 1, "exclusivity requires x, y, z >= 1");
  if (cardinality_is_pqr) {
    const std::int64_t size = profile.t + (rc.p() - 1) * profile.x + (rc.q() - 1) * profile.y + (rc.r() - 1) * profile.z;
    require(size == rc.modulus(), "profile cardinality is " + std::to_string(size) + ", not pqr");
  }
  const auto v = structured_cyclotomic_membership(profile, rc);
  ExclusivityVerdict out;
  const int pairwise = v.pq.holds + v.qr.holds + v.pr.holds;
  out.pqr_excludes_pairwise = !v.pqr.holds || pairwise == 0;
  out.pairwise_checked = cardinality_is_pqr;
  if (cardinality_is_pqr) out.at_most_one_pairwise = pairwise <= 1;
  return out;
}

// Tilings with |B| = pqr ----------------------------------------------------

struct Theorem1Check {
  bool hypotheses_hold = false;  // Phi_p, Phi_q, Phi_r divide A(x)
  bool conclusion_holds = false; // Phi_pq, Phi_pr, Phi_qr, Phi_pqr divide A(x)
  bool consistent = false;       // hypotheses imply conclusion
  std::vector<std::pair<std::int64_t, bool>> divisibility;  // index -> Phi_index | A(x)
};

/// For A + B = Z/MZ, M = |A||B|, |B| = pqr and |A| = p^a q^b r^c (a, b, c >= 1):
/// whether Phi_p, Phi_q, Phi_r dividing A(x) carries over to the products.
inline Theorem1Check verify_theorem1(const IntegerSet& a, const IntegerSet& b, const ResidueCoordinates& rc) {
  const std::int64_t p = rc.p(), q = rc.q(), r = rc.r();
  require(!a.empty() && !b.empty(), "empty set");
  require(static_cast<std::int64_t>(b.size()) == rc.modulus(),
          "|B| = " + std::to_string(b.size()) + " is not pqr = " + std::to_string(rc.modulus()));
  const Factorization fa(static_cast<std::int64_t>(a.size()));
  const bool only_pqr = std::all_of(fa.factors().begin(), fa.factors().end(), [&](const PrimePower& f) {
    return f.prime == p || f.prime == q || f.prime == r;
  });
  require(only_pqr && fa.exponent_of(p) >= 1 && fa.exponent_of(q) >= 1 && fa.exponent_of(r) >= 1,
          "|A| = " + std::to_string(a.size()) + " is not p^a q^b r^c with a, b, c >= 1");
  const auto modulus = static_cast<std::int64_t>(a.size() * b.size());
  require(is_tiling(a, b, modulus), "not a tiling of Z/" + std::to_string(modulus) + "Z");

  Theorem1Check out;
  auto test = [&](std::int64_t d) {
    const bool divides = divides_cyclotomic(a, d);
    out.divisibility.emplace_back(d, divides);
    return divides;
  };
  bool hypotheses = true, conclusion = true;
  for (auto d : {p, q, r}) hypotheses = test(d) && hypotheses;
  for (auto d : {p * q, p * r, q * r, p * q * r}) conclusion = test(d) && conclusion;
  out.hypotheses_hold = hypotheses;
  out.conclusion_holds = conclusion;
  out.consistent = !out.hypotheses_hold || out.conclusion_holds;
  return out;
}

}  // namespace ztile
