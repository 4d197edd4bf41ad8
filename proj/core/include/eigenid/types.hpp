#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "eigenid/errors.hpp"

namespace eigenid {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using ValidityMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Fixed tolerances. Every threshold the library applies at runtime is
/// pinned here; tests assert against the same constants.
namespace tol {

/// Hermiticity: max |A(i,j) - conj(A(j,i))| allowed, relative to max |A|.
inline constexpr double hermiticity_rel = 1e-12;
/// Orthonormality residual max |Q*Q - I| for accepted decompositions.
inline constexpr double orthonormality = 1e-10;
/// Eigen-residual max |AQ - Q diag(w)| allowed, relative to max |A|.
inline constexpr double residual_rel = 1e-8;
/// Unit-norm slack for constraint vectors and phase factors.
inline constexpr double unit_norm = 1e-12;
/// Orthonormality slack for whole bases (C*C = I).
inline constexpr double basis_orthonormality = 1e-10;
/// Eigenvalue gap threshold scale: gap_tol = gap_scale * (w_max - w_min + 1).
/// Gap-ratio denominators below this poison the dependent outputs.
inline constexpr double gap_scale = 1e-8;
/// Row/column sums of fully valid squared-magnitude tables stay within
/// this distance of 1.
inline constexpr double stochasticity = 1e-8;
/// Default elementwise tolerance for the verification experiments.
inline constexpr double default_eps = 1e-10;
/// Residual threshold for a successful constraint recovery.
inline constexpr double recover_residual = 1e-8;
/// Two candidate eigenvalues within this of each other make the
/// drop-smallest-|lambda| deflation ambiguous.
inline constexpr double ambiguous_drop = 1e-10;
/// Target-snapping scale: a target within snap_scale * spread of an
/// eigenvalue pins the corresponding weight to exact zero.
inline constexpr double snap_scale = 1e-10;
/// Negative weights of at most this magnitude are roundoff and clamp to 0;
/// anything more negative is an infeasibility.
inline constexpr double weight_clamp = 1e-12;

}  // namespace tol

/// Eigenvalue gap threshold for the spectrum w.
double gap_tolerance(const RealVector& eigenvalues);

/// Dense n-by-n complex Hermitian matrix (real symmetric as the special
/// case of all-zero imaginary parts). Construction validates hermiticity;
/// inputs failing it are rejected, never silently symmetrized.
class HermitianMatrix {
 public:
  /// Validates at the default tolerance, hermiticity_rel * max |entries|.
  explicit HermitianMatrix(ComplexMatrix entries);

  /// Validates at the given absolute tolerance.
  HermitianMatrix(ComplexMatrix entries, double hermiticity_tol);

  /// Real symmetric input.
  explicit HermitianMatrix(const RealMatrix& entries);

  /// Escape hatch: replaces the input with (M + M*)/2 before validating.
  static HermitianMatrix symmetrized(const ComplexMatrix& raw);

  Index size() const { return entries_.rows(); }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(Index i, Index j) const { return entries_(i, j); }

  /// True when every imaginary part is exactly zero.
  bool is_real() const { return is_real_; }

  /// Real view; only meaningful when is_real().
  RealMatrix real_entries() const { return entries_.real(); }

 private:
  ComplexMatrix entries_;
  bool is_real_;
};

/// Spectral decomposition A = Q diag(w) Q*. Eigenvalues ascending; columns
/// of Q are unit eigenvectors with the phase convention that the
/// largest-magnitude element of each column is real positive (ties broken
/// by lowest index), so identical inputs decompose to identical bytes.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  Index size() const { return eigenvalues.size(); }
};

/// How a table of deflated spectra was produced.
enum class SpectraProvenance {
  MinorDeletion,       // row j: eigenvalues of A with row/column j deleted
  ProjectionDeflation, // row j: eigenvalues of P_j A P_j, zero mode dropped
  SubspaceRestriction, // row j: eigenvalues of B_j* A B_j
};

/// n-by-(n-1) table of deflated spectra: row j holds the ascending
/// eigenvalues of the j-th minor / projected matrix. Every row interlaces
/// the parent spectrum (Cauchy).
struct MinorSpectra {
  RealMatrix values;
  SpectraProvenance provenance = SpectraProvenance::MinorDeletion;
  /// Per-row flag, set only by drop-smallest-|lambda| deflation when the
  /// two smallest |eigenvalues| were too close to distinguish.
  std::vector<bool> ambiguous_drop;

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
};

/// n-by-n table of squared magnitudes: values(i, j) estimates |q_ij|^2
/// (rows index eigenvalues, columns index vector elements). Entries are
/// clamped to [0, 1]; rows whose eigenvalue gap underflowed the gap
/// tolerance are flagged invalid (their values are set to 0, never NaN).
/// A fully valid table is doubly stochastic.
struct SquaredMagnitudes {
  RealMatrix values;
  ValidityMask valid;

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
  bool all_valid() const { return valid.all(); }
};

}  // namespace eigenid
