#pragma once

// Harmonic numbers, factorials, unsigned Stirling numbers of the first kind,
// and harmonic-number closed forms of the shape
//
//     a(n) = sign^n * scale * (n + f)! * (2 H(n + s) - 3)
//
// which covers both built-in sequences.

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/rational.hpp"
#include "seqproof/sequence.hpp"

namespace seqproof {

/// Prefix table H(0), H(1), ... grown on demand. Concurrent readers share the
/// table; growth takes the exclusive lock.
class HarmonicTable {
 public:
  Rational operator()(std::int64_t m) {
    if (m < 0) throw DomainError("harmonic number at negative index " + std::to_string(m));
    const auto idx = static_cast<std::size_t>(m);
    {
      std::shared_lock lock(mutex_);
      if (idx < table_.size()) return table_[idx];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.emplace_back(0);
    table_.reserve(idx + 1);
    while (table_.size() <= idx) {
      const auto k = static_cast<std::int64_t>(table_.size());
      table_.push_back(table_.back() + Rational(1, k));
    }
    return table_[idx];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> table_;
};

inline HarmonicTable& harmonic_table() {
  static HarmonicTable table;
  return table;
}

/// H_m = 1 + 1/2 + ... + 1/m, H_0 = 0.
inline Rational harmonic(std::int64_t m) { return harmonic_table()(m); }

inline BigInt factorial(std::int64_t m) {
  if (m < 0) throw DomainError("factorial of negative integer " + std::to_string(m));
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

/// Unsigned Stirling number of the first kind c(n, m), by the triangle
/// recurrence c(n, m) = c(n-1, m-1) + (n-1) c(n-1, m). Zero outside the
/// triangle.
inline BigInt stirling_cycle(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) return 0;
  // row[k] holds c(i, k) for k <= m
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, BigInt(0));
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    const BigInt w = big(i - 1);
    for (auto k = static_cast<std::size_t>(std::min(i, m)); k >= 1; --k) row[k] = row[k - 1] + w * row[k];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(m)];
}

/// a(n) = sign^n * scale * (n + factorial_shift)! * (2 H(n + harmonic_shift) - 3),
/// defined for n >= domain_min.
struct HarmonicClosedForm {
  std::string name;
  int sign = 1;  // +1 or -1
  Rational scale{1};
  std::int64_t factorial_shift = 0;
  std::int64_t harmonic_shift = 0;
  std::int64_t domain_min = 0;

  Rational value(std::int64_t n) const {
    if (n < domain_min)
      throw DomainError(name + " closed form is defined for n >= " + std::to_string(domain_min) +
                        ", got n = " + std::to_string(n));
    Rational h = Rational(2) * harmonic(n + harmonic_shift) - Rational(3);
    Rational v = scale * h * Rational(factorial(n + factorial_shift));
    return (sign < 0 && (n % 2 != 0)) ? -v : v;
  }

  /// Integer value; NonIntegerError if the formula does not produce one.
  BigInt operator()(std::int64_t n) const {
    Rational v = value(n);
    if (!v.is_integer())
      throw NonIntegerError(name + " closed form at n = " + std::to_string(n) + " is " + v.str());
    return v.num();
  }

  SequenceTable table(std::int64_t lo, std::int64_t hi) const {
    std::vector<BigInt> vals;
    if (hi >= lo) vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) vals.push_back((*this)(n));
    return {lo, std::move(vals), Provenance::ClosedForm};
  }
};

/// A045406: (-1)^n (2 H(n-3) - 3) (n-3)!, n >= 3.
inline const HarmonicClosedForm& a045406_closed_form() {
  static const HarmonicClosedForm f{"A045406", -1, Rational(1), -3, -3, 3};
  return f;
}

/// A001711: (1/4) (n+3)! (2 H(n+3) - 3), n >= 0.
inline const HarmonicClosedForm& a001711_closed_form() {
  static const HarmonicClosedForm f{"A001711", 1, Rational(1, 4), 3, 3, 0};
  return f;
}

inline BigInt closed_form_A045406(std::int64_t n) { return a045406_closed_form()(n); }
inline BigInt closed_form_A001711(std::int64_t n) { return a001711_closed_form()(n); }

/// Built-in closed forms by name; nullopt for unknown names.
inline std::optional<HarmonicClosedForm> find_closed_form(const std::string& name) {
  if (name == "A045406") return a045406_closed_form();
  if (name == "A001711") return a001711_closed_form();
  return std::nullopt;
}

}  // namespace seqproof
