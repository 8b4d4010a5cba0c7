#pragma once

#include <stdexcept>
#include <string>

namespace osptri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quotient was formed with a denominator that is identically zero.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a point where the denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Evaluation was asked for a value but a variable had no assignment.
class MissingVariable : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, polynomials, ranges).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace osptri
