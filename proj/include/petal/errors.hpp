#pragma once

#include <stdexcept>
#include <string>

namespace petal {

/// Raised when a network description or argument violates its contract.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of a numeric computation on otherwise valid input.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The eigenvalue 1 of a weight matrix is not simple.
class MultipleUnitEigenvalues : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A requested value is missing from one of the quotient spectra.
class NoSuchEigenvalue : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The characteristic function vanishes identically on the scan grid.
class DegenerateEquation : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Trajectory reached the numerical floor before the requested window.
class Underflow : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace petal
