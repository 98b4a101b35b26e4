#pragma once

// Exact scalars. BigInt is GMP's mpz_class; Rational wraps mpq_class and keeps
// it canonical (den > 0, gcd(num, den) = 1, zero as 0/1) after every operation.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "seqproof/errors.hpp"

namespace seqproof {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// Parses an optionally signed base-10 integer; nullopt on any other input.
inline std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return std::nullopt;
  BigInt r;
  std::string digits(text.substr(i));
  if (r.set_str(digits, 10) != 0) return std::nullopt;
  if (text[0] == '-') r = -r;
  return r;
}

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : q_(big(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}      // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(std::int64_t num, std::int64_t den) : Rational(big(num), big(den)) {}

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Numerator when the value is an integer; NonIntegerError otherwise.
  BigInt to_integer() const {
    if (!is_integer()) throw NonIntegerError("expected an integer, got " + str());
    return q_.get_num();
  }

  std::string str() const { return q_.get_str(10); }

  Rational operator-() const { return from(-q_); }
  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return from(1 / q_);
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_;
};

/// Division that reports a zero divisor as an empty result instead of throwing.
inline std::optional<Rational> checked_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}

}  // namespace seqproof
