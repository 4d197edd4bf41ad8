#pragma once

#include "eigenid/types.hpp"

namespace eigenid {

/// Default hermiticity threshold for a raw matrix: hermiticity_rel
/// relative to the largest entry magnitude.
double default_hermiticity_tolerance(const ComplexMatrix& entries);

/// True iff max |A(i,j) - conj(A(j,i))| <= tol. Throws DimensionError on
/// non-square input.
bool validate_hermitian(const ComplexMatrix& entries, double tol);
bool validate_hermitian(const HermitianMatrix& a, double tol);

/// Ascending eigenvalues only (no vectors). Same solver family as
/// eigendecompose but roughly twice as fast.
RealVector eigenvalues_of(const HermitianMatrix& a);

/// Full decomposition A = Q diag(w) Q*, eigenvalues ascending, column
/// phases fixed (largest-magnitude element real positive, ties to the
/// lowest index). The returned decomposition is checked against its
/// contract: max |Q*Q - I| < orthonormality tol and
/// max |AQ - Q diag(w)| < residual_rel * max |A|; violations throw
/// ConvergenceError.
SpectralDecomposition eigendecompose(const HermitianMatrix& a);

}  // namespace eigenid
