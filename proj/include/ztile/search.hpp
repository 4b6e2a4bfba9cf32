#pragma once

/**
 * @file search.hpp
 * @brief Backtracking search for tiling complements and tiling enumeration.
 *
 * Complements are built as exact covers of Z/MZ by translates of A. The
 * smallest uncovered residue u must be a + b for some a in A, so each node
 * branches on b = u - a. A candidate b is rejected as soon as
 * gcd(b - b', M) lands in D_A for some b' already chosen; by Sands' theorem
 * no tiling can contain such a pair.
 *
 * Complements are reported up to translation: each one is the
 * lexicographically smallest translate containing 0 (canonical_form).
 */

#include "ztile/cyclotomic.hpp"
#include "ztile/integer_set.hpp"
#include "ztile/numtheory.hpp"
#include "ztile/parallel.hpp"
#include "ztile/spectra.hpp"
#include "ztile/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace ztile {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Lexicographically smallest translate of the residues mod M that contains 0.
inline IntegerSet canonical_form(const IntegerSet& set, std::int64_t modulus) {
  const auto res = reduce_mod(set, modulus);
  std::vector<std::int64_t> best, candidate;
  for (auto s : res) {
    candidate.clear();
    for (auto x : res) candidate.push_back(mod_floor(x - s, modulus));
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  }
  return IntegerSet(std::move(best));
}

namespace detail {

class ComplementSearch {
 public:
  ComplementSearch(const IntegerSet& a, std::int64_t modulus)
      : modulus_(modulus),
        tile_(residues(reduce_mod(a, modulus), modulus)),
        target_(static_cast<std::size_t>(modulus) / a.size()),
        blocked_(static_cast<std::size_t>(modulus), 0) {
    std::vector<char> in_d(static_cast<std::size_t>(modulus) + 1, 0);
    for (auto g : difference_divisors(a, modulus)) in_d[static_cast<std::size_t>(g)] = 1;
    for (std::int64_t r = 0; r < modulus; ++r) blocked_[static_cast<std::size_t>(r)] = in_d[static_cast<std::size_t>(gcd_conv(modulus, r))];
  }

  struct State {
    std::vector<char> covered;
    std::vector<std::int64_t> chosen;
    std::int64_t next_uncovered = 0;
  };

  State root() const {
    State s{std::vector<char>(static_cast<std::size_t>(modulus_), 0), {}, 0};
    place(s, 0);
    return s;
  }

  /// Candidates for the smallest uncovered residue, ascending.
  std::vector<std::int64_t> branches(State& s) const {
    while (s.next_uncovered < modulus_ && s.covered[static_cast<std::size_t>(s.next_uncovered)]) ++s.next_uncovered;
    std::vector<std::int64_t> out;
    if (s.next_uncovered >= modulus_) return out;
    for (auto a : tile_) {
      const std::int64_t b = mod_floor(s.next_uncovered - a, modulus_);
      if (admissible(s, b)) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void place(State& s, std::int64_t b) const {
    for (auto a : tile_) s.covered[static_cast<std::size_t>((a + b) % modulus_)] = 1;
    s.chosen.push_back(b);
  }

  void unplace(State& s) const {
    const std::int64_t b = s.chosen.back();
    for (auto a : tile_) s.covered[static_cast<std::size_t>((a + b) % modulus_)] = 0;
    s.chosen.pop_back();
  }

  bool complete(const State& s) const { return s.chosen.size() == target_; }

  /// Depth-first from `s`, appending canonical complements until `limit` are held.
  void run(State& s, std::vector<IntegerSet>& out, std::size_t limit) const {
    if (out.size() >= limit) return;
    if (complete(s)) {
      IntegerSet found(s.chosen);
      if (canonical_form(found, modulus_) == found) out.push_back(std::move(found));
      return;
    }
    const std::int64_t saved = s.next_uncovered;
    for (auto b : branches(s)) {
      place(s, b);
      run(s, out, limit);
      unplace(s);
      s.next_uncovered = saved;
      if (out.size() >= limit) return;
    }
  }

 private:
  bool admissible(const State& s, std::int64_t b) const {
    for (auto prev : s.chosen)
      if (blocked_[static_cast<std::size_t>(mod_floor(b - prev, modulus_))]) return false;
    for (auto a : tile_)
      if (s.covered[static_cast<std::size_t>((a + b) % modulus_)]) return false;
    return true;
  }

  std::int64_t modulus_;
  std::vector<std::int64_t> tile_;
  std::size_t target_;
  std::vector<char> blocked_;  // residue r with gcd(r, M) in D_A
};

}  // namespace detail

/// Complements B of A in Z/MZ up to translation, each the canonical translate.
///
/// The first `limit` canonical complements met by the depth-first search are
/// returned, sorted lexicographically. With jobs > 1 the top-level branches
/// are searched concurrently; the result is identical to jobs == 1.
inline std::vector<IntegerSet> find_complements(const IntegerSet& a, std::int64_t modulus,
                                                std::size_t limit = kUnlimited, unsigned jobs = 1) {
  require(!a.empty(), "complement search for an empty set");
  require(modulus >= 1, "modulus must be positive");
  require(modulus % static_cast<std::int64_t>(a.size()) == 0,
          "|A| = " + std::to_string(a.size()) + " does not divide M = " + std::to_string(modulus));
  require(distinct_mod(a, modulus), "elements of A are not distinct modulo " + std::to_string(modulus));

  std::vector<IntegerSet> out;
  if (limit == 0) return out;
  const detail::ComplementSearch search(a, modulus);
  auto root = search.root();
  if (search.complete(root) || jobs <= 1) {
    search.run(root, out, limit);
  } else {
    const auto top = search.branches(root);
    auto per_branch = parallel_map(jobs, top.size(), [&](std::size_t i) {
      auto state = search.root();
      search.place(state, top[i]);
      std::vector<IntegerSet> found;
      search.run(state, found, limit);
      return found;
    });
    for (auto& found : per_branch)
      for (auto& s : found)
        if (out.size() < limit) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct TilingWitness {
  IntegerSet complement;
  std::int64_t modulus = 0;
};

struct FindTilingOptions {
  /// Skip moduli not divisible by every element of S_A. Every tiling
  /// A + B = Z/MZ has S_A among the prime powers dividing M (a consequence of
  /// (T1) for both tiles), so this never hides a tiling.
  bool skip_incompatible_moduli = true;
  unsigned jobs = 1;
};

/// First complement over moduli M = |A|, 2|A|, ... up to max_modulus.
/// Bounded sweep only: no claim is made about moduli past the bound.
inline std::optional<TilingWitness> find_tiling(const IntegerSet& a, std::int64_t max_modulus,
                                                const FindTilingOptions& options = {}) {
  require(!a.empty(), "tiling search for an empty set");
  const auto k = static_cast<std::int64_t>(a.size());
  std::vector<std::int64_t> support;
  if (options.skip_incompatible_moduli) support = cyclotomic_support_prime_powers(a);
  for (std::int64_t m = k; m <= max_modulus; m += k) {
    if (!distinct_mod(a, m)) continue;
    if (std::any_of(support.begin(), support.end(), [&](std::int64_t s) { return m % s != 0; })) continue;
    auto found = find_complements(a, m, 1, options.jobs);
    if (!found.empty()) return TilingWitness{std::move(found.front()), m};
  }
  return std::nullopt;
}

struct TilingPair {
  std::int64_t modulus = 0;
  IntegerSet a;
  IntegerSet b;

  friend bool operator==(const TilingPair&, const TilingPair&) = default;
  friend auto operator<=>(const TilingPair& x, const TilingPair& y) {
    if (auto c = x.modulus <=> y.modulus; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
};

namespace detail {

// Canonical sets of the given size in Z/MZ, ascending.
inline std::vector<IntegerSet> canonical_subsets(std::int64_t modulus, std::size_t size) {
  std::vector<IntegerSet> out;
  std::vector<std::int64_t> pick{0};
  // Lexicographic combinations of {1..M-1} completing {0}.
  auto recurse = [&](auto&& self, std::int64_t from) -> void {
    if (pick.size() == size) {
      IntegerSet s(pick);
      if (canonical_form(s, modulus) == s) out.push_back(std::move(s));
      return;
    }
    for (std::int64_t x = from; x < modulus; ++x) {
      if (modulus - x < static_cast<std::int64_t>(size - pick.size())) break;
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

}  // namespace detail

/// All tilings A + B = Z/MZ for M <= max_modulus with both sets canonical,
/// ordered by M, then A, then B.
inline std::vector<TilingPair> enumerate_tilings(std::int64_t max_modulus, unsigned jobs = 1) {
  struct Task {
    std::int64_t modulus;
    IntegerSet a;
  };
  std::vector<Task> tasks;
  for (std::int64_t m = 1; m <= max_modulus; ++m)
    for (auto k : divisors(m)) {
      if (k * k > m) break;
      for (auto& s : detail::canonical_subsets(m, static_cast<std::size_t>(k))) tasks.push_back({m, std::move(s)});
    }

  auto found = parallel_map(jobs, tasks.size(), [&](std::size_t i) {
    return find_complements(tasks[i].a, tasks[i].modulus);
  });

  std::set<TilingPair> pairs;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (const auto& b : found[i]) {
      pairs.insert({tasks[i].modulus, tasks[i].a, b});
      pairs.insert({tasks[i].modulus, b, tasks[i].a});
    }
  return {pairs.begin(), pairs.end()};
}

}  // namespace ztile
