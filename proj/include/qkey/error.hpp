#pragma once

#include <stdexcept>
#include <string>

namespace qkey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Evaluation of a rational function at a root of its denominator.
class Pole : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation that should always succeed did not (e.g. an expansion left a
/// nonzero remainder, or straightening ran out of fuel).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qkey
