#pragma once

#include <stdexcept>
#include <string>

namespace fncalc {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational strings, JSON documents). The message
/// carries enough location detail to find the offending token.
struct ParseError : Error {
  using Error::Error;
};

/// |f| cannot be certified piecewise-polynomial for the requested operation.
struct UnsupportedDegreeError : Error {
  using Error::Error;
};

/// A piece takes negative values where nonnegativity is required.
struct NegativePieceError : Error {
  using Error::Error;
};

/// Interval index outside the valid range for the given n.
struct IndexOutOfRangeError : Error {
  using Error::Error;
};

/// Closed-form operations with an (m, n) order requirement got n < m.
struct BadOrderError : Error {
  using Error::Error;
};

/// (p, q, r) does not satisfy 1/r = 1/p + 1/q - 1.
struct InvalidTripleError : Error {
  using Error::Error;
};

/// A high-precision comparison could not be decided after one refinement.
struct PrecisionExhaustedError : Error {
  using Error::Error;
};

} // namespace fncalc
