#pragma once

// P-recursive recurrences  sum_{i=0..r} p_i(n) a(n - i) = 0  for n >= valid_from,
// with exact residual checks, forward unfolding and guessing from terms.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/linalg.hpp"
#include "seqproof/polynomial.hpp"
#include "seqproof/rational.hpp"
#include "seqproof/sequence.hpp"

namespace seqproof {

class PRecurrence {
 public:
  /// coeffs = p_0 .. p_r with integer coefficients, r >= 1 and p_0 != 0.
  PRecurrence(std::vector<Polynomial> coeffs, std::int64_t valid_from)
      : coeffs_(std::move(coeffs)), valid_from_(valid_from) {
    if (coeffs_.size() < 2) throw DomainError("a recurrence needs order >= 1");
    if (coeffs_.front().is_zero()) throw DomainError("leading recurrence coefficient p0 is zero");
    for (const auto& p : coeffs_) {
      if (!p.has_integer_coeffs()) throw DomainError("recurrence coefficient " + p.str() + " is not integral");
      std::vector<BigInt> ic;
      for (const auto& c : p.coeffs()) ic.push_back(c.num());
      int_coeffs_.push_back(std::move(ic));
    }
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  std::int64_t valid_from() const { return valid_from_; }

  /// p_i(n) for integer n.
  BigInt coeff_at(std::size_t i, const BigInt& n) const {
    BigInt acc = 0;
    const auto& c = int_coeffs_[i];
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * n + *it;
    return acc;
  }

  /// `p0 = ...; p1 = ...; from = n0`, the recurrence-spec syntax.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      s += "p" + std::to_string(i) + " = " + coeffs_[i].str() + "; ";
    return s + "from = " + std::to_string(valid_from_);
  }

  /// Same operator, ignoring valid_from.
  bool same_operator(const PRecurrence& o) const { return coeffs_ == o.coeffs_; }

  friend bool operator==(const PRecurrence& a, const PRecurrence& b) {
    return a.coeffs_ == b.coeffs_ && a.valid_from_ == b.valid_from_;
  }

 private:
  std::vector<Polynomial> coeffs_;
  std::vector<std::vector<BigInt>> int_coeffs_;
  std::int64_t valid_from_;
};

/// Canonical representative of the class of coeffs under rational-function
/// scaling: divide by the polynomial gcd of all p_i, clear to a primitive
/// integer coefficient set, and make the leading coefficient of p_0 positive.
inline std::vector<Polynomial> canonical_coeffs(std::vector<Polynomial> coeffs) {
  Polynomial g;
  for (const auto& p : coeffs)
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : polygcd(g, p);
  if (g.is_zero()) return coeffs;
  for (auto& p : coeffs) p = exact_div(p, g);

  BigInt l = 1, content = 0;
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs()) {
      BigInt v = c.num() * (l / c.den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  Rational factor(l, content);
  if (coeffs.front().leading().sign() < 0) factor = -factor;
  for (auto& p : coeffs) p = p * Polynomial(factor);
  return coeffs;
}

inline PRecurrence canonical(const PRecurrence& rec) {
  return {canonical_coeffs(rec.coeffs()), rec.valid_from()};
}

/// Left-hand side sum_i p_i(n) a(n-i) without the valid_from check.
inline BigInt evaluate_lhs(const PRecurrence& rec, const SequenceTable& seq, std::int64_t n) {
  const auto r = static_cast<std::int64_t>(rec.order());
  seq.require(n - r, n);
  const BigInt x = big(n);
  BigInt acc = 0;
  for (std::size_t i = 0; i <= rec.order(); ++i) acc += rec.coeff_at(i, x) * seq.at(n - static_cast<std::int64_t>(i));
  return acc;
}

/// Exact residual at n >= valid_from.
inline BigInt residual(const PRecurrence& rec, const SequenceTable& seq, std::int64_t n) {
  if (n < rec.valid_from())
    throw DomainError("residual requested at n = " + std::to_string(n) + " below valid_from = " +
                      std::to_string(rec.valid_from()));
  return evaluate_lhs(rec, seq, n);
}

struct ResidualReport {
  std::int64_t n_lo = 0;
  std::int64_t n_hi = -1;
  std::vector<std::pair<std::int64_t, BigInt>> failures;  // sorted by n
  std::chrono::nanoseconds elapsed{0};

  bool ok() const { return failures.empty(); }
  std::int64_t checked() const { return n_hi >= n_lo ? n_hi - n_lo + 1 : 0; }
};

/// Residual at every n in [n_lo, n_hi]. The range is split across threads;
/// the merged failure list is ordered by n.
inline ResidualReport sweep(const PRecurrence& rec, const SequenceTable& seq, std::int64_t n_lo, std::int64_t n_hi,
                            unsigned threads = 0) {
  const auto start = std::chrono::steady_clock::now();
  ResidualReport report{n_lo, n_hi, {}, {}};
  if (n_lo <= n_hi) {
    if (n_lo < rec.valid_from())
      throw DomainError("sweep starts at n = " + std::to_string(n_lo) + " below valid_from = " +
                        std::to_string(rec.valid_from()));
    seq.require(n_lo - static_cast<std::int64_t>(rec.order()), n_hi);

    const std::int64_t count = n_hi - n_lo + 1;
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::clamp<std::int64_t>(count / 256, 1, threads));

    std::vector<std::vector<std::pair<std::int64_t, BigInt>>> parts(threads);
    auto work = [&](unsigned t) {
      const std::int64_t lo = n_lo + count * t / threads;
      const std::int64_t hi = n_lo + count * (t + 1) / threads - 1;
      for (std::int64_t n = lo; n <= hi; ++n) {
        BigInt r = evaluate_lhs(rec, seq, n);
        if (r != 0) parts[t].emplace_back(n, std::move(r));
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (auto& p : parts)
      for (auto& f : p) report.failures.push_back(std::move(f));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// Extends `initial` to index `upto` by solving the recurrence for a(n).
inline SequenceTable unfold(const PRecurrence& rec, const SequenceTable& initial, std::int64_t upto) {
  const auto r = static_cast<std::int64_t>(rec.order());
  if (upto <= initial.last()) return initial;
  if (initial.size() < rec.order()) throw RangeError({initial.end()});
  if (initial.end() < rec.valid_from())
    throw DomainError("unfold would start at n = " + std::to_string(initial.end()) + " below valid_from = " +
                      std::to_string(rec.valid_from()));

  std::vector<BigInt> vals = initial.values();
  const std::int64_t offset = initial.offset();
  for (std::int64_t n = initial.end(); n <= upto; ++n) {
    const BigInt x = big(n);
    BigInt partial = 0;
    for (std::int64_t i = 1; i <= r; ++i)
      partial += rec.coeff_at(static_cast<std::size_t>(i), x) * vals[static_cast<std::size_t>(n - i - offset)];
    const BigInt lead = rec.coeff_at(0, x);
    if (lead == 0) throw DomainError("leading coefficient p0 vanishes at n = " + std::to_string(n));
    if (!mpz_divisible_p(partial.get_mpz_t(), lead.get_mpz_t()))
      throw NonIntegerError("unfold produced a non-integer term at n = " + std::to_string(n));
    BigInt next;
    mpz_divexact(next.get_mpz_t(), partial.get_mpz_t(), lead.get_mpz_t());
    vals.push_back(-next);
  }
  return {offset, std::move(vals), Provenance::Recurrence};
}

struct GuessOptions {
  std::size_t guard = 5;
  /// Leading rows that may be dropped when no relation fits from the first
  /// row on (sequences often start with irregular initial terms).
  std::size_t max_leading_skip = 8;
};

/// Minimum number of consecutive terms guess() needs.
inline std::size_t guess_min_terms(std::size_t order, std::size_t degree, std::size_t guard = 5) {
  return (order + 1) * (degree + 1) + order + guard;
}

/// Candidate recurrences of order <= `order` with coefficient degree <=
/// `degree`, found from the exact nullspace of the ansatz
/// sum_{i,j} c_ij n^j a(n-i) = 0 over unknowns + guard consecutive rows and
/// re-verified on every available term from the first sampled row on.
/// Sampling starts at the first row; if nothing fits, leading rows are
/// dropped one at a time (up to max_leading_skip). valid_from is the first
/// sampled row. Results are canonical and deduplicated.
inline std::vector<PRecurrence> guess(const SequenceTable& seq, std::size_t order, std::size_t degree,
                                      GuessOptions opts = {}) {
  if (order < 1) throw DomainError("guess needs order >= 1");
  if (opts.guard < 5) throw DomainError("guess needs guard >= 5");
  const std::size_t need = guess_min_terms(order, degree, opts.guard);
  if (seq.size() < need) throw InsufficientTerms(seq.size(), need);
  if (std::all_of(seq.values().begin(), seq.values().end(), [](const BigInt& v) { return v == 0; }))
    throw TrivialInput("all supplied terms are zero; every recurrence fits");

  const std::size_t unknowns = (order + 1) * (degree + 1);
  const auto r = static_cast<std::int64_t>(order);
  const std::size_t rows = unknowns + opts.guard;

  std::vector<PRecurrence> out;
  for (std::size_t skip = 0; skip <= opts.max_leading_skip && out.empty(); ++skip) {
    const std::int64_t first_row = seq.offset() + r + static_cast<std::int64_t>(skip);
    if (first_row + static_cast<std::int64_t>(rows) - 1 > seq.last()) break;

    IntMatrix m;
    m.reserve(rows);
    for (std::size_t k = 0; k < rows; ++k) {
      const std::int64_t n = first_row + static_cast<std::int64_t>(k);
      std::vector<BigInt> row;
      row.reserve(unknowns);
      for (std::size_t i = 0; i <= order; ++i) {
        const BigInt& a = seq.at(n - static_cast<std::int64_t>(i));
        BigInt pw = 1;
        for (std::size_t j = 0; j <= degree; ++j) {
          row.push_back(pw * a);
          pw *= n;
        }
      }
      m.push_back(std::move(row));
    }

    for (const auto& v : nullspace_bareiss(std::move(m), unknowns)) {
      std::vector<Polynomial> coeffs;
      for (std::size_t i = 0; i <= order; ++i) {
        std::vector<Rational> c;
        for (std::size_t j = 0; j <= degree; ++j) c.emplace_back(v[i * (degree + 1) + j]);
        coeffs.emplace_back(std::move(c));
      }
      // A vanishing p_0 .. p_{k-1} is the recurrence shifted by k: substitute n -> n + k.
      std::size_t k = 0;
      while (k < coeffs.size() && coeffs[k].is_zero()) ++k;
      while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
      if (coeffs.size() < k + 2) continue;
      std::vector<Polynomial> shifted;
      for (std::size_t i = k; i < coeffs.size(); ++i)
        shifted.push_back(coeffs[i].shifted(Rational(static_cast<std::int64_t>(k))));

      PRecurrence cand(canonical_coeffs(std::move(shifted)), first_row - static_cast<std::int64_t>(k));
      const std::int64_t lo = std::max(cand.valid_from(), seq.offset() + static_cast<std::int64_t>(cand.order()));
      bool holds = true;
      for (std::int64_t n = lo; n <= seq.last() && holds; ++n) holds = evaluate_lhs(cand, seq, n) == 0;
      if (!holds) continue;
      if (std::none_of(out.begin(), out.end(), [&](const PRecurrence& p) { return p == cand; }))
        out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace seqproof
