#pragma once

#include <stdexcept>
#include <string>

namespace invset {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when user-supplied input fails validation (off-lattice exponents,
/// non-representable angles, malformed tokens). The CLI maps these to exit 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An exponent whose denominator exceeds the finest constructible root.
class UndefinedExponent : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A cosine that is not on the dyadic lattice of the ambient configuration.
class OffLattice : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A longitude that does not correspond to an integer circle coordinate.
class NonRepresentablePhi : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace invset
