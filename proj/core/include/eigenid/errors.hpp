#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eigenid {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input matrix is not square, or its size is unusable for the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A row/column/element index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Two arguments have incompatible shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input matrix fails the hermiticity check.
class HermiticityError : public Error {
 public:
  using Error::Error;
};

/// A vector that must have unit norm (or a phase that must have unit
/// modulus) does not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A matrix whose columns must be orthonormal is not.
class OrthonormalityError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver failed to converge, or produced a decomposition that
/// violates its output contract.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, long iterations_attempted)
      : Error(what), iterations_attempted_(iterations_attempted) {}

  long iterations_attempted() const { return iterations_attempted_; }

 private:
  long iterations_attempted_;
};

/// The spectrum is (near-)degenerate: an eigenvalue gap fell below the
/// gap tolerance, so gap-ratio denominators are unusable.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Prescribed target values violate the interlacing feasibility condition.
class InfeasibilityError : public Error {
 public:
  InfeasibilityError(const std::string& what, std::ptrdiff_t violated_index)
      : Error(what), violated_index_(violated_index) {}

  /// Index k of the first target x_k outside its [w_k, w_{k+1}] band,
  /// or -1 when the violation is not tied to a single index.
  std::ptrdiff_t violated_index() const { return violated_index_; }

 private:
  std::ptrdiff_t violated_index_;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Input file exists but its contents do not parse against the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eigenid
