#pragma once

#include <stdexcept>
#include <string>

namespace hypcert {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, scalars, points, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation is violated (arity, degree, grading, kind).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypcert
