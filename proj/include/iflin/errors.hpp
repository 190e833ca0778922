#pragma once

#include <stdexcept>
#include <string>

namespace iflin {

// Base of every error raised by the library. Each subclass names one failure
// class so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Syntax error in a scalar literal.
class MalformedScalar : public Error {
 public:
  using Error::Error;
};

// Well-formed value outside [0,1], or mu + nu > 1.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// Structural problem in an input document.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its candidate cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotInSpan : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace iflin
