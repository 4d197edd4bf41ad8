#include "eigenid/projection.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "eigenid/parallel.hpp"

namespace eigenid {

namespace {

void check_unit(const ComplexVector& v) {
  if (v.size() == 0) throw DimensionError("unit vector cannot be empty");
  double norm = v.norm();
  if (std::abs(norm - 1.0) > tol::unit_norm)
    throw NormalizationError("vector norm " + std::to_string(norm) +
                             " deviates from 1 beyond tolerance");
}

}  // namespace

UnitVector::UnitVector(ComplexVector entries) : entries_(std::move(entries)) {
  check_unit(entries_);
}

UnitVector::UnitVector(const RealVector& entries) : UnitVector(ComplexVector(entries.cast<Complex>())) {}

UnitVector UnitVector::normalized(ComplexVector v) {
  double norm = v.norm();
  if (norm == 0.0) throw NormalizationError("cannot normalize the zero vector");
  v /= norm;
  return UnitVector(std::move(v));
}

OrthonormalBasis::OrthonormalBasis(ComplexMatrix columns) : columns_(std::move(columns)) {
  if (columns_.rows() != columns_.cols())
    throw DimensionError("orthonormal basis must be square, got " +
                         std::to_string(columns_.rows()) + "x" +
                         std::to_string(columns_.cols()));
  if (columns_.size() == 0) throw DimensionError("orthonormal basis cannot be empty");
  ComplexMatrix gram = columns_.adjoint() * columns_;
  gram.diagonal().array() -= 1.0;
  double defect = gram.cwiseAbs().maxCoeff();
  if (defect > tol::basis_orthonormality)
    throw OrthonormalityError("basis columns are not orthonormal: max |C*C - I| = " +
                              std::to_string(defect));
}

OrthonormalBasis::OrthonormalBasis(const RealMatrix& columns)
    : OrthonormalBasis(ComplexMatrix(columns.cast<Complex>())) {}

OrthonormalBasis OrthonormalBasis::identity(Index n) {
  return OrthonormalBasis(ComplexMatrix(ComplexMatrix::Identity(n, n)));
}

UnitVector OrthonormalBasis::column(Index j) const {
  if (j < 0 || j >= columns_.cols())
    throw IndexError("basis column " + std::to_string(j) + " out of range");
  return UnitVector(ComplexVector(columns_.col(j)));
}

HermitianMatrix projector(const UnitVector& c) {
  const Index n = c.size();
  ComplexMatrix p = ComplexMatrix::Identity(n, n) - c.entries() * c.entries().adjoint();
  return HermitianMatrix(std::move(p));
}

ComplexMatrix complement_basis(const UnitVector& c) {
  const Index n = c.size();
  // Householder reflector H = I - 2uu*/(u*u) sending c to alpha*e_1 with
  // alpha = -c_1/|c_1| (magnitudes add in u_1, so no cancellation). H is
  // unitary and Hermitian; its trailing n-1 columns span the complement.
  Complex pivot_phase = (c(0) == Complex(0.0, 0.0)) ? Complex(1.0, 0.0)
                                                    : c(0) / std::abs(c(0));
  ComplexVector u = c.entries();
  u(0) += pivot_phase;  // u = c - alpha*e_1, alpha = -pivot_phase
  double uu = u.squaredNorm();
  ComplexMatrix h = ComplexMatrix::Identity(n, n);
  h.noalias() -= (2.0 / uu) * (u * u.adjoint());
  return h.rightCols(n - 1);
}

ProjectedSpectrum projected_spectrum(const HermitianMatrix& a, const UnitVector& c,
                                     DeflationMode mode) {
  const Index n = a.size();
  if (n < 2)
    throw DimensionError("projected spectrum needs n >= 2, got n = " + std::to_string(n));
  if (c.size() != n)
    throw ShapeError("constraint length " + std::to_string(c.size()) +
                     " does not match matrix size " + std::to_string(n));

  ProjectedSpectrum result;
  if (mode == DeflationMode::Restriction) {
    ComplexMatrix b = complement_basis(c);
    ComplexMatrix restricted = b.adjoint() * a.entries() * b;
    result.values = eigenvalues_of(HermitianMatrix(std::move(restricted)));
    return result;
  }

  // PaperDropSmallest: spectrum of PAP with the smallest-|lambda| entry
  // removed. Removal from an ascending vector keeps it ascending.
  HermitianMatrix p = projector(c);
  ComplexMatrix deflated = p.entries() * a.entries() * p.entries();
  RealVector v = eigenvalues_of(HermitianMatrix(std::move(deflated)));
  Index drop = 0;
  for (Index i = 1; i < n; ++i)
    if (std::abs(v(i)) < std::abs(v(drop))) drop = i;
  double runner_up = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i)
    if (i != drop) runner_up = std::min(runner_up, std::abs(v(i)));
  result.ambiguous_drop = (runner_up - std::abs(v(drop))) < tol::ambiguous_drop;
  result.values.resize(n - 1);
  for (Index i = 0, k = 0; i < n; ++i)
    if (i != drop) result.values(k++) = v(i);
  return result;
}

MinorSpectra projected_spectra(const HermitianMatrix& a, const OrthonormalBasis& c,
                               DeflationMode mode) {
  const Index n = a.size();
  if (c.size() != n)
    throw ShapeError("basis size " + std::to_string(c.size()) +
                     " does not match matrix size " + std::to_string(n));
  if (n < 2)
    throw DimensionError("projected spectra need n >= 2, got n = " + std::to_string(n));

  MinorSpectra spectra;
  spectra.values.resize(n, n - 1);
  spectra.provenance = (mode == DeflationMode::Restriction)
                           ? SpectraProvenance::SubspaceRestriction
                           : SpectraProvenance::ProjectionDeflation;
  spectra.ambiguous_drop.assign(static_cast<std::size_t>(n), false);
  parallel_for(n, [&](Index j) {
    try {
      ProjectedSpectrum row = projected_spectrum(a, c.column(j), mode);
      spectra.values.row(j) = row.values.transpose();
      spectra.ambiguous_drop[static_cast<std::size_t>(j)] = row.ambiguous_drop;
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("basis column " + std::to_string(j) + ": " + e.what(),
                             e.iterations_attempted());
    }
  });
  return spectra;
}

SquaredMagnitudes basis_overlap_magnitudes(const HermitianMatrix& a,
                                           const OrthonormalBasis& c,
                                           DeflationMode mode) {
  SpectralDecomposition decomp = eigendecompose(a);
  SquaredMagnitudes r =
      squared_magnitudes_from_spectra(decomp.eigenvalues, projected_spectra(a, c, mode));
  if (!r.valid.any())
    throw DegeneracyError("spectrum is fully degenerate: no eigenvalue gap exceeds the gap tolerance");
  return r;
}

}  // namespace eigenid
