#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * Coefficients are stored by exponent and kept trimmed, so the zero
 * polynomial has no coefficients and degree() == -1. Division is only
 * offered by monic divisors, which keeps quotient and remainder integral.
 */

#include "ztile/numtheory.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ztile {

template <class Coeff = Integer>
class Polynomial {
 public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t exponent, Coeff coeff = Coeff(1)) {
    std::vector<Coeff> c(exponent + 1, Coeff(0));
    c[exponent] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// x^n - 1
  static Polynomial x_pow_minus_one(std::size_t n) {
    std::vector<Coeff> c(n + 1, Coeff(0));
    c[0] = Coeff(-1);
    c[n] += Coeff(1);
    return Polynomial(std::move(c));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Coeff(1); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff coefficient(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Coeff(0);
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = degree(); e >= 0; --e) {
      const Coeff& c = coeffs_[static_cast<std::size_t>(e)];
      if (c == Coeff(0)) continue;
      const bool negative = c < Coeff(0);
      const Coeff mag = negative ? Coeff(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (e == 0 || mag != Coeff(1)) out += to_string(Integer(mag));
      if (e >= 1) out += "x";
      if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Quotient and remainder of f by a monic g; f = g*q + r with deg r < deg g.
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divide_monic(const Polynomial<C>& f, const Polynomial<C>& g) {
  require(!g.is_zero(), "division by the zero polynomial");
  require(g.is_monic(), "divisor must be monic");
  if (f.degree() < g.degree()) return {Polynomial<C>{}, f};
  std::vector<C> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<C> quot(rem.size() - dg, C(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const C lead = rem[k + dg];
    if (lead == C(0)) continue;
    quot[k] = lead;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= lead * gc[j];
  }
  rem.resize(dg);
  return {Polynomial<C>(std::move(quot)), Polynomial<C>(std::move(rem))};
}

template <class C>
Polynomial<C> remainder_monic(const Polynomial<C>& f, const Polynomial<C>& g) {
  return divide_monic(f, g).second;
}

/// The q with f = g*q, or nullopt when g does not divide f.
template <class C>
std::optional<Polynomial<C>> exact_divide(const Polynomial<C>& f, const Polynomial<C>& g) {
  auto [q, r] = divide_monic(f, g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

/// Reduction modulo x^n - 1: exponents folded mod n.
template <class C>
Polynomial<C> fold_cyclic(const Polynomial<C>& f, std::size_t n) {
  require(n >= 1, "fold length must be positive");
  std::vector<C> out(n, C(0));
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out[i % n] += c[i];
  return Polynomial<C>(std::move(out));
}

}  // namespace ztile
