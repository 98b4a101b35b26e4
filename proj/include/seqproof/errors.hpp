#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seqproof {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  explicit PoleError(std::string root, std::string context = {})
      : Error("pole at n = " + root + (context.empty() ? "" : " in " + context)),
        root_(std::move(root)) {}
  const std::string& root() const { return root_; }

 private:
  std::string root_;
};

/// Argument outside the domain of a function (negative factorial, n < 3 for
/// the A045406 closed form, negative harmonic index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result that must be an integer was not.
class NonIntegerError : public Error {
 public:
  using Error::Error;
};

/// Query of sequence values that are not present.
class RangeError : public Error {
 public:
  explicit RangeError(std::vector<std::int64_t> missing)
      : Error(describe(missing)), missing_(std::move(missing)) {}
  const std::vector<std::int64_t>& missing() const { return missing_; }

 private:
  static std::string describe(const std::vector<std::int64_t>& missing) {
    std::string s = "missing sequence values at n =";
    std::size_t shown = 0;
    for (auto n : missing) {
      if (shown++ == 16) {
        s += " ... (" + std::to_string(missing.size()) + " total)";
        break;
      }
      s += " " + std::to_string(n);
    }
    return s;
  }
  std::vector<std::int64_t> missing_;
};

/// Text input rejected by one of the parsers. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Too few terms for the requested recurrence ansatz.
class InsufficientTerms : public Error {
 public:
  InsufficientTerms(std::size_t have, std::size_t need)
      : Error("need at least " + std::to_string(need) + " consecutive terms, have " +
              std::to_string(have)),
        need_(need) {}
  std::size_t minimum() const { return need_; }

 private:
  std::size_t need_;
};

/// Degenerate input where every candidate would be meaningless.
class TrivialInput : public Error {
 public:
  using Error::Error;
};

}  // namespace seqproof
