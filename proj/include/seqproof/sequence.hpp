#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/rational.hpp"

namespace seqproof {

enum class Provenance { ClosedForm, Egf, BFile, Recurrence };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Egf: return "egf";
    case Provenance::BFile: return "b-file";
    case Provenance::Recurrence: return "recurrence";
  }
  return "?";
}

/// Contiguous block of exact sequence values a(offset), a(offset + 1), ...
/// Lookups outside the block throw RangeError; there are no implicit zeros.
class SequenceTable {
 public:
  SequenceTable() = default;
  SequenceTable(std::int64_t offset, std::vector<BigInt> values, Provenance provenance)
      : offset_(offset), values_(std::move(values)), provenance_(provenance) {}

  std::int64_t offset() const { return offset_; }
  /// One past the last index held.
  std::int64_t end() const { return offset_ + static_cast<std::int64_t>(values_.size()); }
  std::int64_t last() const { return end() - 1; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Provenance provenance() const { return provenance_; }
  const std::vector<BigInt>& values() const { return values_; }

  bool contains(std::int64_t n) const { return n >= offset_ && n < end(); }
  bool covers(std::int64_t lo, std::int64_t hi) const {
    return lo > hi || (contains(lo) && contains(hi));
  }

  const BigInt& at(std::int64_t n) const {
    if (!contains(n)) throw RangeError({n});
    return values_[static_cast<std::size_t>(n - offset_)];
  }
  const BigInt& operator[](std::int64_t n) const { return at(n); }

  /// Throws RangeError naming every index of [lo, hi] that is absent.
  void require(std::int64_t lo, std::int64_t hi) const {
    if (covers(lo, hi)) return;
    std::vector<std::int64_t> missing;
    for (std::int64_t n = lo; n <= hi; ++n)
      if (!contains(n)) missing.push_back(n);
    throw RangeError(std::move(missing));
  }

  void push_back(BigInt v) { values_.push_back(std::move(v)); }

  /// Sub-table restricted to [lo, hi] intersected with the held range.
  SequenceTable slice(std::int64_t lo, std::int64_t hi) const {
    lo = std::max(lo, offset_);
    hi = std::min(hi, last());
    if (lo > hi) return {lo, {}, provenance_};
    auto first = values_.begin() + (lo - offset_);
    return {lo, std::vector<BigInt>(first, first + (hi - lo + 1)), provenance_};
  }

  friend bool operator==(const SequenceTable& a, const SequenceTable& b) {
    return a.offset_ == b.offset_ && a.values_ == b.values_;
  }

 private:
  std::int64_t offset_ = 0;
  std::vector<BigInt> values_;
  Provenance provenance_ = Provenance::ClosedForm;
};

}  // namespace seqproof
