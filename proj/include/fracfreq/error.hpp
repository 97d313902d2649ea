#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracfreq {

/// Raised when an argument lies outside an operation's mathematical domain
/// (zero argument, out-of-range order, non-finite result).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the transfer-function parser. `offset()` is the zero-based
/// character position in the input where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when a transfer function cannot be evaluated at a frequency.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& message, double omega);

  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

}  // namespace fracfreq
