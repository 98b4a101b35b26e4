#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "seqproof/errors.hpp"
#include "seqproof/polynomial.hpp"
#include "seqproof/rational.hpp"

namespace seqproof {

/// Quotient of polynomials in n, always stored reduced with a monic
/// denominator so that equal functions compare equal structurally.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(1) {}
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(std::int64_t c) : RationalFunction(Polynomial(c)) {}     // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at x; PoleError if x is a root of the denominator.
  Rational operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d.is_zero()) throw PoleError(x.str());
    return num_(x) / d;
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero();
    return {den_, num_};
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `(num)` or `(num)/(den)`; zero renders as `0`.
  std::string str() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.str() + ")";
    if (!is_polynomial()) s += "/(" + den_.str() + ")";
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (den_.degree() > 0) {
      Polynomial g = polygcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    const Rational lc = den_.leading();
    if (lc != Rational(1)) {
      const Rational inv = lc.inverse();
      num_ = num_ * Polynomial(inv);
      den_ = den_ * Polynomial(inv);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

}  // namespace seqproof
