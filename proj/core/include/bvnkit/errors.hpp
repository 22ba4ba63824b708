#pragma once

#include <stdexcept>

namespace bvnkit {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad dimension, negative
// entry, out-of-range parameter, malformed argument).
struct InvalidInputError : Error {
  using Error::Error;
};

// An iterative procedure hit its iteration budget before reaching the
// requested tolerance.
struct NonConvergenceError : Error {
  using Error::Error;
};

// A scaling factor or normalizer collapsed to zero.
struct DivisionByZeroError : Error {
  using Error::Error;
};

// The input's shape rules out the requested construction (e.g. row and
// column sums disagree, so no doubly stochastic completion exists).
struct UnsupportedShapeError : Error {
  using Error::Error;
};

// The matrix handed to a decomposition is not doubly stochastic within
// the configured tolerance.
struct NotDoublyStochasticError : Error {
  using Error::Error;
};

// The support graph admits no perfect matching, so no decomposition step
// can be taken at all.
struct DegenerateError : Error {
  using Error::Error;
};

// A pruning tolerance is too small even for the unpruned expansion.
struct ToleranceTooTightError : Error {
  using Error::Error;
};

// An operation that needs a 2^n dimension got something else.
struct NotPowerOfTwoError : Error {
  using Error::Error;
};

// A state vector is not normalized to unit Euclidean length.
struct NotNormalizedError : Error {
  using Error::Error;
};

// Two objects that must share a dimension do not.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// Malformed text while reading a matrix or a CSV table.
struct ParseError : Error {
  using Error::Error;
};

// The underlying stream or file failed.
struct IoError : Error {
  using Error::Error;
};

// An internal invariant broke. This is a bug in the library, not a
// caller error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace bvnkit
