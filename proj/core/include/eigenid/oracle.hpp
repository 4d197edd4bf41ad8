#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "eigenid/projection.hpp"
#include "eigenid/types.hpp"

namespace eigenid {

/// Deterministic random stream backing the instance generators.
///
/// Engine: std::mt19937_64 seeded directly with the 64-bit seed (the
/// engine's output sequence is fully specified by the standard, so the
/// stream is reproducible across platforms and compilers).
///   uniform():  (next() >> 11) * 2^-53, i.e. a 53-bit mantissa in [0, 1).
///   gaussian(): basic Box-Muller on (1 - uniform(), uniform()); the
///               second variate of each pair is cached and returned by the
///               next call.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  double uniform();
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

/// Random Hermitian instance, following the notebook construction: draw an
/// n x n matrix with uniform [0,1) real parts (row-major), then uniform
/// [0,1) imaginary parts (row-major, complex case only), and add its own
/// conjugate transpose. Bit-deterministic per (n, seed).
HermitianMatrix random_hermitian(Index n, std::uint64_t seed, bool complex_entries);

/// Random real orthogonal matrix: an n x n standard-Gaussian matrix
/// (row-major draw order) is QR-factorized and the Q columns are
/// sign-corrected so the diagonal of R is positive. Bit-deterministic per
/// (n, seed).
OrthonormalBasis random_orthonormal(Index n, std::uint64_t seed);

/// Ground truth for the identity experiments: R(i, j) = |Q(j, i)|^2 taken
/// directly from the decomposition of a. Always fully valid.
SquaredMagnitudes reference_magnitudes(const HermitianMatrix& a);

/// Maximum elementwise |r - ref| over the entries valid in both tables.
/// Throws ShapeError on mismatched shapes, DegeneracyError when no entry
/// is valid to compare.
double max_abs_diff(const SquaredMagnitudes& r, const SquaredMagnitudes& ref);

/// Outcome of one verification experiment. passed ⇔ the error was
/// computed and came in under the tolerance.
struct ExperimentReport {
  std::string experiment;
  Index n = 0;
  std::optional<std::uint64_t> seed;          // absent for file-loaded inputs
  std::optional<double> max_abs_error;        // absent when not computable
  double tolerance = tol::default_eps;
  bool passed = false;
  std::optional<std::string> reason;          // set on non-numeric failure
  double wall_time_seconds = 0.0;
};

}  // namespace eigenid
