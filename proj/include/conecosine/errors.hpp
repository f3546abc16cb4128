#pragma once

#include <stdexcept>
#include <string>

namespace conecosine {

// Base class for every failure the library reports. The CLI maps these to
// exit code 3; anything else escaping main is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (non-positive-definite
// matrix, exponent outside a convergence region, strip violation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A gamma factor was evaluated at a non-positive integer argument.
// `index` is the 1-based position of the offending entry, 0 when the pole
// belongs to a scalar argument.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, int index)
      : DomainError(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// Minor ratios too close to the cone boundary to evaluate accurately.
class ConditioningError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Rank-deficient input where full column rank is required.
class RankError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Mismatched or unsupported dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Monte Carlo run discarded more samples than the configured budget.
class RejectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace conecosine
