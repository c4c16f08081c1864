#pragma once

#include <stdexcept>
#include <string>

namespace piforge {

/// Input outside an operation's mathematical domain (k >= 1, r <= 0, |x| >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The working precision cannot represent the requested quantity.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what, long required_bits = 0)
      : std::runtime_error(what), required_bits_(required_bits) {}

  /// Suggested precision that would avoid the failure, or 0 when unknown.
  long required_bits() const noexcept { return required_bits_; }

 private:
  long required_bits_;
};

/// No admissible root of a modular polynomial could be isolated.
class RootSelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The coefficient system for a series is rank deficient.
class DegenerateSystemError : public std::runtime_error {
 public:
  DegenerateSystemError(const std::string& what, int rank)
      : std::runtime_error(what), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

/// A computed residual exceeded its threshold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace piforge
