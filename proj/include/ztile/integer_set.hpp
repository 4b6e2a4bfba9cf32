#pragma once

#include "ztile/numtheory.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ztile {

/// Finite set of distinct integers, stored ascending.
///
/// Elements are bounded by kElementBound in absolute value so that pairwise
/// differences and sums of two elements never overflow 64 bits.
class IntegerSet {
 public:
  static constexpr std::int64_t kElementBound = std::int64_t{1} << 61;

  IntegerSet() = default;
  IntegerSet(std::initializer_list<std::int64_t> elements)
      : IntegerSet(std::vector<std::int64_t>(elements)) {}

  /// Sorts the input; rejects duplicates and out-of-range elements.
  explicit IntegerSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      require(elements_[i] > -kElementBound && elements_[i] < kElementBound,
              "set element out of range: " + std::to_string(elements_[i]));
      require(i == 0 || elements_[i] != elements_[i - 1],
              "duplicate set element: " + std::to_string(elements_[i]));
    }
  }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  std::span<const std::int64_t> elements() const { return elements_; }
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }

  std::int64_t min() const {
    require(!empty(), "min of empty set");
    return elements_.front();
  }
  std::int64_t max() const {
    require(!empty(), "max of empty set");
    return elements_.back();
  }
  std::int64_t diameter() const { return max() - min(); }

  bool contains(std::int64_t value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
  }

  IntegerSet translated(std::int64_t shift) const {
    std::vector<std::int64_t> out(elements_);
    for (auto& e : out)
      require(!__builtin_add_overflow(e, shift, &e), "translation overflows");
    return IntegerSet(std::move(out));
  }

  IntegerSet dilated(std::int64_t factor) const {
    require(factor != 0, "dilation factor must be nonzero");
    std::vector<std::int64_t> out(elements_);
    for (auto& e : out)
      require(!__builtin_mul_overflow(e, factor, &e), "dilation overflows");
    return IntegerSet(std::move(out));
  }

  /// Translate so the minimum is 0.
  IntegerSet normalized() const { return empty() ? *this : translated(-min()); }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
  friend auto operator<=>(const IntegerSet& a, const IntegerSet& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<std::int64_t> elements_;
};

inline std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// Residues of the set in [0, modulus), in element order (may repeat).
inline std::vector<std::int64_t> residues(const IntegerSet& set, std::int64_t modulus) {
  require(modulus >= 1, "modulus must be positive");
  std::vector<std::int64_t> out;
  out.reserve(set.size());
  for (auto e : set) out.push_back(mod_floor(e, modulus));
  return out;
}

inline bool distinct_mod(const IntegerSet& set, std::int64_t modulus) {
  auto r = residues(set, modulus);
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

/// The set of residues mod `modulus`; requires the residues to be distinct.
inline IntegerSet reduce_mod(const IntegerSet& set, std::int64_t modulus) {
  require(distinct_mod(set, modulus),
          "elements are not distinct modulo " + std::to_string(modulus));
  return IntegerSet(residues(set, modulus));
}

}  // namespace ztile
