#pragma once

#include "eigenid/projection.hpp"
#include "eigenid/spectral.hpp"
#include "eigenid/types.hpp"

namespace eigenid {

/// Inverse problem solution: the weights, phase choices, and unit
/// constraint vector that make the stationary values of x*Ax on the unit
/// sphere, restricted to the hyperplane c*x = 0, equal the prescribed
/// targets. constraint = Q (signs ⊙ sqrt(weights)), sum of weights = 1.
struct ConstraintRecovery {
  RealVector targets;    // length n-1, ascending
  RealVector weights;    // d_j^2, length n, nonnegative, sums to 1
  ComplexVector signs;   // unit phases; ±1 in the real case
  UnitVector constraint; // c = Q d
};

/// True iff w_k - tol <= x_k <= w_{k+1} + tol for every k, with w of
/// length n ascending and x of length n-1 ascending. Throws ShapeError on
/// a length mismatch.
bool check_interlacing(const RealVector& w, const RealVector& x, double tol);

/// Weights d_j^2 = prod_k (w_j - x_k) / prod_{k != j} (w_j - w_k).
/// Requires the targets to interlace w (within snap_scale * spread);
/// violations throw InfeasibilityError naming the first bad index, and a
/// degenerate w throws DegeneracyError. A target within the snap tolerance
/// of an eigenvalue pins that weight to exact zero. Roundoff negatives of
/// magnitude <= weight_clamp are clamped to zero (and the vector
/// renormalized); anything more negative is an infeasibility.
RealVector constraint_weights(const RealVector& w, const RealVector& x);

/// Recovers the unit constraint c = Q (signs ⊙ sqrt(d^2)) producing the
/// prescribed stationary values. signs supplies one unit phase per element
/// (±1 in the real case, the per-element ambiguity of d_j); empty means
/// all +1. Any sign assignment reproduces the same stationary values.
ConstraintRecovery recover_constraint(const SpectralDecomposition& decomp,
                                      const RealVector& targets,
                                      const ComplexVector& signs = ComplexVector());

/// Stationary values of x*Ax subject to x*x = 1 and c*x = 0: the spectrum
/// of A restricted to the complement of c, ascending.
RealVector stationary_values(const HermitianMatrix& a, const UnitVector& c);

}  // namespace eigenid
