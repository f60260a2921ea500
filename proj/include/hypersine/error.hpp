#pragma once

#include <stdexcept>
#include <string>

namespace hypersine {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input (bad sizes, empty sample sets, malformed spec data).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A function was asked for a value outside its domain.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Support of an iterated convolution exceeded the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Non-finite or overflowing numerical values.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A linear system that should be nonsingular was numerically singular.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Recurrence data whose linearization has negative coefficients.
class NotHypergroupError : public Error {
 public:
  using Error::Error;
};

/// A classification that must hold was violated numerically.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersine
