#pragma once

// Harmonic-affine expressions
//
//     sum_s  c_s(n) * H[n + s]  +  r(n)
//
// with rational-function coefficients c_s and remainder r. Shift
// normalization rewrites every H[n + s] onto a single anchor H[n + a] using
// H[m + 1] = H[m] + 1/(m + 1) one step at a time; the 1/(n + k) corrections
// fold into the remainder.
//
// Text rendering (stable): terms in decreasing shift order, each as
// `<coeff> * H[n<shift>]`, joined by ` + `, followed by the remainder, e.g.
//
//     (2) * H[n-4] + (-3)
//     (2)/(n^3 - 3*n^2 + 2*n) * H[n-3] + (-3)/(n^3 - 3*n^2 + 2*n)
//
// Coefficients use RationalFunction::str(). A zero remainder is omitted
// unless the expression is zero, which renders as `0`.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "seqproof/errors.hpp"
#include "seqproof/polynomial.hpp"
#include "seqproof/rational_function.hpp"
#include "seqproof/special.hpp"

namespace seqproof {

inline std::string harmonic_symbol(std::int64_t shift) {
  if (shift == 0) return "H[n]";
  return "H[n" + std::string(shift > 0 ? "+" : "-") + std::to_string(shift > 0 ? shift : -shift) + "]";
}

class HarmonicAffineExpr {
 public:
  using Terms = std::map<std::int64_t, RationalFunction>;

  HarmonicAffineExpr() = default;
  HarmonicAffineExpr(RationalFunction remainder)  // NOLINT(google-explicit-constructor)
      : remainder_(std::move(remainder)) {}

  /// coeff * H[n + shift].
  static HarmonicAffineExpr harmonic(std::int64_t shift, RationalFunction coeff = RationalFunction(1)) {
    HarmonicAffineExpr e;
    e.add_term(shift, std::move(coeff));
    return e;
  }

  /// coeff * (2 H[n + shift] - 3), the h-quantity of the proofs.
  static HarmonicAffineExpr h(std::int64_t shift, const RationalFunction& coeff = RationalFunction(1)) {
    HarmonicAffineExpr e = harmonic(shift, coeff * RationalFunction(2));
    e.remainder_ = coeff * RationalFunction(-3);
    return e;
  }

  const Terms& terms() const { return terms_; }
  const RationalFunction& remainder() const { return remainder_; }
  bool is_zero() const { return terms_.empty() && remainder_.is_zero(); }

  RationalFunction coefficient(std::int64_t shift) const {
    auto it = terms_.find(shift);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  std::optional<std::int64_t> min_shift() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  void add_term(std::int64_t shift, const RationalFunction& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(shift, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_remainder(const RationalFunction& r) { remainder_ += r; }

  HarmonicAffineExpr& operator+=(const HarmonicAffineExpr& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    remainder_ += o.remainder_;
    return *this;
  }
  friend HarmonicAffineExpr operator+(HarmonicAffineExpr a, const HarmonicAffineExpr& b) { return a += b; }
  HarmonicAffineExpr operator-() const { return scale(RationalFunction(-1)); }
  friend HarmonicAffineExpr operator-(HarmonicAffineExpr a, const HarmonicAffineExpr& b) { return a += -b; }

  /// Multiplies every coefficient and the remainder by c.
  HarmonicAffineExpr scale(const RationalFunction& c) const {
    HarmonicAffineExpr r;
    for (const auto& [s, coeff] : terms_) r.add_term(s, coeff * c);
    r.remainder_ = remainder_ * c;
    return r;
  }
  friend HarmonicAffineExpr operator*(const RationalFunction& c, const HarmonicAffineExpr& e) { return e.scale(c); }

  friend bool operator==(const HarmonicAffineExpr& a, const HarmonicAffineExpr& b) {
    return a.terms_ == b.terms_ && a.remainder_ == b.remainder_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += it->second.str() + " * " + harmonic_symbol(it->first);
    }
    if (!remainder_.is_zero()) out += (out.empty() ? "" : " + ") + remainder_.str();
    return out;
  }

 private:
  Terms terms_;
  RationalFunction remainder_;
};

/// Rewrites every harmonic term onto H[n + anchor]. With no anchor the
/// smallest shift present is used.
inline HarmonicAffineExpr normalize(const HarmonicAffineExpr& e, std::optional<std::int64_t> anchor = std::nullopt) {
  const std::int64_t a = anchor ? *anchor : e.min_shift().value_or(0);
  HarmonicAffineExpr out(e.remainder());
  for (const auto& [s, coeff] : e.terms()) {
    RationalFunction correction;
    // H[n+s] = H[n+s-1] + 1/(n+s)
    for (std::int64_t k = s; k > a; --k) correction += RationalFunction(Polynomial(1), Polynomial::linear(k));
    // H[n+s] = H[n+s+1] - 1/(n+s+1)
    for (std::int64_t k = s + 1; k <= a; ++k) correction -= RationalFunction(Polynomial(1), Polynomial::linear(k));
    out.add_term(a, coeff);
    out.add_remainder(coeff * correction);
  }
  return out;
}

struct AlphaBeta {
  RationalFunction alpha;
  RationalFunction beta;
  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

/// Normalizes onto the anchor and returns (coefficient of H[n + anchor], remainder).
inline AlphaBeta reduce_to_alpha_beta(const HarmonicAffineExpr& e, std::optional<std::int64_t> anchor = std::nullopt) {
  const std::int64_t a = anchor ? *anchor : e.min_shift().value_or(0);
  HarmonicAffineExpr normal = normalize(e, a);
  return {normal.coefficient(a), normal.remainder()};
}

/// Exact value at integer n. DomainError for a negative harmonic index and
/// PoleError for a vanishing denominator, both naming the offending term.
inline Rational hexpr_eval(const HarmonicAffineExpr& e, std::int64_t n) {
  const Rational x(n);
  Rational total;
  for (const auto& [s, coeff] : e.terms()) {
    const std::string term = coeff.str() + " * " + harmonic_symbol(s);
    if (n + s < 0)
      throw DomainError("negative harmonic index " + std::to_string(n + s) + " in term " + term + " at n = " +
                        std::to_string(n));
    Rational c;
    try {
      c = coeff(x);
    } catch (const PoleError&) {
      throw PoleError(std::to_string(n), "term " + term);
    }
    total += c * harmonic(n + s);
  }
  try {
    total += e.remainder()(x);
  } catch (const PoleError&) {
    throw PoleError(std::to_string(n), "remainder " + e.remainder().str());
  }
  return total;
}

}  // namespace seqproof
