#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/rational.hpp"
#include "seqproof/sequence.hpp"
#include "seqproof/special.hpp"

namespace seqproof {

/// Dense formal power series in x truncated after x^order (inclusive).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back(0);
  }

  /// 1 + x + ... style helpers: sum of coeffs[k] x^k padded to `order`.
  static TruncatedSeries polynomial(std::vector<Rational> coeffs, std::size_t order) {
    coeffs.resize(order + 1);
    return TruncatedSeries(std::move(coeffs));
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  Rational& operator[](std::size_t k) { return c_.at(k); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
  }

  TruncatedSeries truncated(std::size_t order) const {
    std::vector<Rational> c(c_.begin(), c_.begin() + std::min(order, this->order()) + 1);
    return TruncatedSeries(std::move(c));
  }

  /// Term-wise derivative; the result is exact through x^(order-1).
  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(std::size_t{0});
    std::vector<Rational> d(order());
    for (std::size_t k = 1; k <= order(); ++k) d[k - 1] = c_[k] * Rational(static_cast<std::int64_t>(k));
    return TruncatedSeries(std::move(d));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + b * Rational(-1);
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }

  /// Schoolbook Cauchy product truncated to the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// log(1 + x) = x - x^2/2 + x^3/3 - ...
inline TruncatedSeries series_log1p(std::int64_t order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  TruncatedSeries s(static_cast<std::size_t>(order));
  for (std::int64_t k = 1; k <= order; ++k) s[k] = Rational(k % 2 ? 1 : -1, k);
  return s;
}

/// F(x) = ((1 + x) log(1 + x))^2 / 2, the e.g.f. of A045406.
inline TruncatedSeries build_F(std::int64_t order) {
  if (order < 2) throw DomainError("build_F needs order >= 2");
  const auto n = static_cast<std::size_t>(order);
  TruncatedSeries log_sq = series_log1p(order) * series_log1p(order);
  TruncatedSeries one_plus_x_sq = TruncatedSeries::polynomial({1, 2, 1}, n);
  return log_sq * one_plus_x_sq * Rational(1, 2);
}

/// a(n) = n! [x^n] F for first_index <= n <= order; every value must be an
/// exact integer.
inline SequenceTable egf_coefficients(const TruncatedSeries& f, std::int64_t first_index = 0) {
  std::vector<BigInt> vals;
  BigInt fact = factorial(std::max<std::int64_t>(first_index, 0));
  for (auto n = static_cast<std::size_t>(std::max<std::int64_t>(first_index, 0)); n <= f.order(); ++n) {
    if (n > 0 && static_cast<std::int64_t>(n) > first_index) fact *= static_cast<unsigned long>(n);
    const Rational& c = f[n];
    if (!mpz_divisible_p(fact.get_mpz_t(), c.den().get_mpz_t()))
      throw NonIntegerError("n! [x^n] F is not an integer at n = " + std::to_string(n) + " (coefficient " +
                            c.str() + ")");
    BigInt v = (fact / c.den()) * c.num();
    vals.push_back(std::move(v));
  }
  return {std::max<std::int64_t>(first_index, 0), std::move(vals), Provenance::Egf};
}

/// Built-in e.g.f. builders by name.
inline std::optional<TruncatedSeries> build_named_egf(const std::string& name, std::int64_t order) {
  if (name == "A045406") return build_F(order);
  return std::nullopt;
}

inline bool has_named_egf(const std::string& name) { return name == "A045406"; }

}  // namespace seqproof
