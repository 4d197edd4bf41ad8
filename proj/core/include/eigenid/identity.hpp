#pragma once

#include "eigenid/spectral.hpp"
#include "eigenid/types.hpp"

namespace eigenid {

/// The (n-1)x(n-1) principal minor of A with row j and column j deleted.
/// Throws IndexError for j out of range, DimensionError for n < 2.
HermitianMatrix principal_minor(const HermitianMatrix& a, Index j);

/// Row j holds the ascending eigenvalues of principal_minor(a, j).
/// The n eigensolves are independent and run across worker threads.
MinorSpectra minor_spectra(const HermitianMatrix& a);

/// Squared magnitudes from spectra alone:
///
///   R(i, j) = prod_k (w_i - x_jk) / prod_{k != i} (w_i - w_k)
///
/// where x_jk are the deflated eigenvalues in row j of X. Row i is flagged
/// invalid when w_i sits within the gap tolerance of another eigenvalue
/// (the denominator is then unusable). Valid entries are clamped to [0, 1];
/// invalid entries are set to 0. Factors are multiplied smallest-magnitude
/// first, switching to log-magnitude + sign accumulation for n > 64.
SquaredMagnitudes squared_magnitudes_from_spectra(const RealVector& w,
                                                  const MinorSpectra& x);

/// End to end: R(i, j) estimates |q_ij|^2, the squared magnitude of
/// element j of the i-th eigenvector, computed purely from the eigenvalues
/// of A and of its n principal minors. Throws DegeneracyError when the
/// whole spectrum is degenerate (no valid rows); a partially degenerate
/// spectrum yields a partial result with flags.
SquaredMagnitudes eigenvector_magnitudes(const HermitianMatrix& a);

}  // namespace eigenid
