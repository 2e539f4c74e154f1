#pragma once

#include <stdexcept>
#include <string>

namespace meanratio {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance (or Tung-form arguments) violates a feasibility constraint.
/// `what()` carries the verdict text produced by validate().
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// The caller asked for something the instance does not support, e.g. an
/// AM-mode bound on a GM-mode instance.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Nonpositive, nonfinite or empty numeric input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// m = n: no free numbers remain, so the requested construction is vacuous.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The λ vector makes the GM-mode objective's denominator nonpositive.
class LambdaRegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace meanratio
