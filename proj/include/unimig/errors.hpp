#pragma once

#include <stdexcept>
#include <string>

namespace unimig {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value is not a carrier point of the active grid (exact mode), or lies
/// farther than eps from every carrier point (float mode).
struct NotOnGridError : Error {
  using Error::Error;
};

/// A scalar outside the unit interval.
struct OutOfRangeError : Error {
  using Error::Error;
};

/// Config text could not be tokenized or has malformed syntax.
struct ParseError : Error {
  using Error::Error;
};

/// Config parsed, but names, references or parameters are invalid.
struct ValidationError : Error {
  using Error::Error;
};

/// A constructed operator failed its own axiom gate.
struct ConstructionError : Error {
  using Error::Error;
};

/// Caller violated a documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// Operator tags fit no subclass specialization.
struct ShapeMismatchError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace unimig
