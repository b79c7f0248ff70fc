#pragma once

#include <stdexcept>
#include <string>

namespace jnmf {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (negative entry, bad parameter).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Shapes do not conform.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed CSV or JSON input.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A computation produced NaN or Inf.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jnmf
