#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/rational.hpp"

namespace seqproof {

/// Univariate polynomial in the formal variable n over the rationals.
///
/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  Polynomial(std::int64_t c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  /// The polynomial n.
  static Polynomial n() { return Polynomial({Rational(0), Rational(1)}); }
  /// n + c.
  static Polynomial linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation at an integer point; requires integer coefficients.
  BigInt eval_integer(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_integer();
    return acc;
  }

  bool has_integer_coeffs() const {
    for (const auto& c : coeffs_)
      if (!c.is_integer()) return false;
    return true;
  }

  /// p(n + k).
  Polynomial shifted(const Rational& k) const {
    Polynomial acc;
    const Polynomial step = linear(k);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Polynomial(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      d.push_back(coeffs_[k] * Rational(static_cast<std::int64_t>(k)));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r(1), b = *this;
    while (e) {
      if (e & 1U) r *= b;
      b *= b;
      e >>= 1U;
    }
    return r;
  }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<Rational> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quot(a.degree() - db + 1);
    const Rational lead_inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
      if (rem[k].is_zero()) continue;
      Rational q = rem[k] * lead_inv;
      quot[k - db] = q;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Quotient of an exact division; NonIntegerError-free but throws
  /// DomainError if `b` does not divide `a`.
  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Renders in the recurrence-spec syntax: expanded form (`2*n - 7`), or
  /// `c*(n+r)^d` when the polynomial is a pure power of a linear factor with
  /// integer root. The output parses back to the same polynomial.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::string expanded_str() const;

  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor by the Euclidean algorithm. gcd(p, 0) is the
/// monic associate of p. Both inputs zero is a DomainError.
inline Polynomial polygcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

inline std::string scalar_str(const Rational& c) {
  return c.is_integer() ? c.str() : "(" + c.str() + ")";
}

}  // namespace detail

inline std::string Polynomial::expanded_str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "n" : "n^" + std::to_string(k));
    if (k == 0)
      out += detail::scalar_str(mag);
    else if (mag == Rational(1))
      out += mono;
    else
      out += detail::scalar_str(mag) + "*" + mono;
  }
  return out;
}

inline std::string Polynomial::str() const {
  const int d = degree();
  if (d >= 2) {
    // p = lc * (n - root)^d with root = -c_{d-1} / (d * lc)
    const Rational lc = leading();
    const Rational shift = coeffs_[d - 1] / (lc * Rational(d));
    if (shift.is_integer() && !shift.is_zero() && *this == linear(shift).pow(d) * Polynomial(lc)) {
      std::string base = "(n";
      base += shift.sign() < 0 ? "-" + (-shift).str() : "+" + shift.str();
      base += ")^" + std::to_string(d);
      if (lc == Rational(1)) return base;
      if (lc == Rational(-1)) return "-" + base;
      return detail::scalar_str(lc) + "*" + base;
    }
  }
  return expanded_str();
}

}  // namespace seqproof
