#include "eigenid/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <utility>

namespace eigenid {

namespace {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& entries) {
  return max_abs(entries - entries.adjoint());
}

// Eigen's self-adjoint solver gives up after 30 sweeps per off-diagonal.
long iteration_budget(Index n) { return 30L * static_cast<long>(n); }

// Scales each column so its largest-magnitude element is real positive;
// ties resolve to the lowest index.
void fix_column_phases(ComplexMatrix& q) {
  for (Index j = 0; j < q.cols(); ++j) {
    Index best = 0;
    double best_mag = std::abs(q(0, j));
    for (Index i = 1; i < q.rows(); ++i) {
      double mag = std::abs(q(i, j));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag == 0.0) continue;  // zero column; solver contract check will reject
    Complex pivot = q(best, j);
    q.col(j) *= std::conj(pivot) / std::abs(pivot);
    q(best, j) = Complex(std::abs(pivot), 0.0);  // kill the roundoff imaginary part
  }
}

void check_contract(const HermitianMatrix& a, const SpectralDecomposition& d) {
  const Index n = a.size();
  ComplexMatrix gram = d.eigenvectors.adjoint() * d.eigenvectors;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) >= tol::orthonormality)
    throw ConvergenceError("eigendecomposition violates orthonormality contract",
                           iteration_budget(n));
  ComplexMatrix residual = a.entries() * d.eigenvectors -
                           d.eigenvectors * d.eigenvalues.cast<Complex>().asDiagonal();
  if (max_abs(residual) > tol::residual_rel * max_abs(a.entries()))
    throw ConvergenceError("eigendecomposition violates residual contract",
                           iteration_budget(n));
}

}  // namespace

double gap_tolerance(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return tol::gap_scale;
  double spread = eigenvalues.maxCoeff() - eigenvalues.minCoeff();
  return tol::gap_scale * (spread + 1.0);
}

double default_hermiticity_tolerance(const ComplexMatrix& entries) {
  return tol::hermiticity_rel * max_abs(entries);
}

bool validate_hermitian(const ComplexMatrix& entries, double tol) {
  if (entries.rows() != entries.cols())
    throw DimensionError("matrix must be square, got " + std::to_string(entries.rows()) +
                         "x" + std::to_string(entries.cols()));
  return hermiticity_defect(entries) <= tol;
}

bool validate_hermitian(const HermitianMatrix& a, double tol) {
  return validate_hermitian(a.entries(), tol);
}

HermitianMatrix::HermitianMatrix(ComplexMatrix entries)
    : HermitianMatrix(std::move(entries), -1.0) {}

HermitianMatrix::HermitianMatrix(ComplexMatrix entries, double hermiticity_tol)
    : entries_(std::move(entries)) {
  if (hermiticity_tol < 0.0) hermiticity_tol = default_hermiticity_tolerance(entries_);
  if (!validate_hermitian(entries_, hermiticity_tol))
    throw HermiticityError("matrix is not Hermitian: asymmetry " +
                           std::to_string(hermiticity_defect(entries_)) + " exceeds " +
                           std::to_string(hermiticity_tol));
  is_real_ = (entries_.size() == 0) || (entries_.imag().cwiseAbs().maxCoeff() == 0.0);
}

HermitianMatrix::HermitianMatrix(const RealMatrix& entries)
    : HermitianMatrix(entries.cast<Complex>()) {}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& raw) {
  if (raw.rows() != raw.cols())
    throw DimensionError("matrix must be square, got " + std::to_string(raw.rows()) + "x" +
                         std::to_string(raw.cols()));
  return HermitianMatrix(ComplexMatrix(0.5 * (raw + raw.adjoint())));
}

RealVector eigenvalues_of(const HermitianMatrix& a) {
  if (a.is_real()) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a.real_entries(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ConvergenceError("eigensolver did not converge", iteration_budget(a.size()));
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigensolver did not converge", iteration_budget(a.size()));
  return solver.eigenvalues();
}

SpectralDecomposition eigendecompose(const HermitianMatrix& a) {
  SpectralDecomposition d;
  if (a.is_real()) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a.real_entries());
    if (solver.info() != Eigen::Success)
      throw ConvergenceError("eigensolver did not converge", iteration_budget(a.size()));
    d.eigenvalues = solver.eigenvalues();
    d.eigenvectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.entries());
    if (solver.info() != Eigen::Success)
      throw ConvergenceError("eigensolver did not converge", iteration_budget(a.size()));
    d.eigenvalues = solver.eigenvalues();
    d.eigenvectors = solver.eigenvectors();
  }
  fix_column_phases(d.eigenvectors);
  check_contract(a, d);
  return d;
}

}  // namespace eigenid
