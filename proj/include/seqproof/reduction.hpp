#pragma once

// Bridge from a harmonic closed form and a recurrence to the harmonic-affine
// expression whose vanishing proves the recurrence.
//
// With a(n) = sign^n c (n+f)! h(n+s), h(m) = 2 H(m) - 3, the left-hand side
// sum_i p_i(n) a(n-i) divided by sign^n c (n+f-r)! is
//
//     sum_i p_i(n) sign^i [(n+f-r+1) ... (n+f-i)] h(n+s-i),
//
// a polynomial-coefficient combination of shifted h's. The common polynomial
// content of those coefficients is divided out as well, which for A045406
// is the factor (n-4) and leaves
//
//     (n-3) h(n-3) - (2n-7) h(n-4) + (n-4) h(n-5).

#include <cstdint>

#include "seqproof/harmonic_expr.hpp"
#include "seqproof/polynomial.hpp"
#include "seqproof/recurrence.hpp"
#include "seqproof/special.hpp"

namespace seqproof {

inline HarmonicAffineExpr derive_h_expression(const HarmonicClosedForm& form, const PRecurrence& rec) {
  const auto r = static_cast<std::int64_t>(rec.order());
  std::vector<Polynomial> weights;
  for (std::int64_t i = 0; i <= r; ++i) {
    // (n+f-i)! / (n+f-r)! = prod_{k = f-r+1}^{f-i} (n + k)
    Polynomial w = rec.coeffs()[static_cast<std::size_t>(i)];
    for (std::int64_t k = form.factorial_shift - r + 1; k <= form.factorial_shift - i; ++k)
      w *= Polynomial::linear(Rational(k));
    if (form.sign < 0 && (i % 2 != 0)) w = -w;
    weights.push_back(std::move(w));
  }

  Polynomial content;
  for (const auto& w : weights)
    if (!w.is_zero()) content = content.is_zero() ? w.monic() : polygcd(content, w);

  HarmonicAffineExpr e;
  for (std::int64_t i = 0; i <= r; ++i) {
    Polynomial w = weights[static_cast<std::size_t>(i)];
    if (w.is_zero()) continue;
    if (!content.is_zero()) w = exact_div(w, content);
    e += HarmonicAffineExpr::h(form.harmonic_shift - i, RationalFunction(w));
  }
  return e;
}

/// The bracket H(n-1)/n - 2 H(n-2)/(n-1) + H(n-3)/(n-2) from the e.g.f.
/// coefficient extraction, optionally multiplied through by n(n-1)(n-2).
inline HarmonicAffineExpr egf_bracket_A045406(bool cleared) {
  const Polynomial n = Polynomial::n();
  const Polynomial n1 = Polynomial::linear(Rational(-1));
  const Polynomial n2 = Polynomial::linear(Rational(-2));
  HarmonicAffineExpr e = HarmonicAffineExpr::harmonic(-1, RationalFunction(Polynomial(1), n)) +
                         HarmonicAffineExpr::harmonic(-2, RationalFunction(Polynomial(-2), n1)) +
                         HarmonicAffineExpr::harmonic(-3, RationalFunction(Polynomial(1), n2));
  return cleared ? e.scale(RationalFunction(n * n1 * n2)) : e;
}

}  // namespace seqproof
