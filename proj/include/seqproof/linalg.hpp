#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/rational.hpp"

namespace seqproof {

using IntMatrix = std::vector<std::vector<BigInt>>;

namespace detail {

/// Primitive integer multiple of a rational vector with the first nonzero
/// entry positive.
inline std::vector<BigInt> primitive(const std::vector<Rational>& v) {
  BigInt l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    BigInt y = x.num() * (l / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    out.push_back(std::move(y));
  }
  if (g == 0) return out;
  int lead = 0;
  for (const auto& y : out)
    if ((lead = sgn(y)) != 0) break;
  for (auto& y : out) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
    if (lead < 0) y = -y;
  }
  return out;
}

}  // namespace detail

/// Basis of the right nullspace { x : M x = 0 } over the rationals, as
/// primitive integer vectors, one per free column (in column order).
///
/// Forward elimination is fraction-free (Bareiss): every update
/// (p * m_ij - m_ik * m_rj) / p_prev is an exact integer division, so
/// intermediate entries stay bounded by minors of M.
inline std::vector<std::vector<BigInt>> nullspace_bareiss(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& r : m)
    if (r.size() != cols) throw DomainError("ragged matrix");

  std::vector<std::size_t> pivot_cols;
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const BigInt& piv = m[row][col];
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = piv * m[i][j] - m[i][col] * m[row][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw Error("fraction-free elimination produced a non-exact quotient");
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = piv;
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Rational acc;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (!x[j].is_zero() && m[k][j] != 0) acc += Rational(m[k][j]) * x[j];
      x[pc] = -acc / Rational(m[k][pc]);
    }
    basis.push_back(detail::primitive(x));
  }
  return basis;
}

}  // namespace seqproof
