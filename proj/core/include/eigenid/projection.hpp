#pragma once

#include "eigenid/identity.hpp"
#include "eigenid/types.hpp"

namespace eigenid {

/// Unit-norm complex vector. Construction rejects vectors whose norm
/// deviates from 1 by more than the unit-norm tolerance.
class UnitVector {
 public:
  explicit UnitVector(ComplexVector entries);
  explicit UnitVector(const RealVector& entries);

  /// Scales an arbitrary nonzero vector to unit norm.
  static UnitVector normalized(ComplexVector v);

  Index size() const { return entries_.size(); }
  const ComplexVector& entries() const { return entries_; }
  Complex operator()(Index i) const { return entries_(i); }

 private:
  ComplexVector entries_;
};

/// Square matrix whose columns form an orthonormal basis (C*C = I within
/// the basis tolerance).
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(ComplexMatrix columns);
  explicit OrthonormalBasis(const RealMatrix& columns);

  static OrthonormalBasis identity(Index n);

  Index size() const { return columns_.rows(); }
  const ComplexMatrix& columns() const { return columns_; }
  UnitVector column(Index j) const;

 private:
  ComplexMatrix columns_;
};

/// How the projector-induced zero mode is removed from a projected
/// spectrum.
enum class DeflationMode {
  /// Eigenvalues of B*AB where B spans the orthogonal complement of c.
  /// No artificial zero is introduced; unconditionally correct.
  Restriction,
  /// Eigenvalues of PAP with the smallest-|lambda| one dropped. Faithful
  /// to the notebook experiments, but picks the wrong eigenvalue whenever
  /// A itself has an eigenvalue closer to zero than the projector's.
  PaperDropSmallest,
};

/// Rank-one projector P = I - cc*. Hermitian, idempotent, annihilates c.
HermitianMatrix projector(const UnitVector& c);

/// n x (n-1) matrix B with orthonormal columns spanning the orthogonal
/// complement of c (B*B = I, B*c = 0). Built from the Householder
/// reflector that maps c to a multiple of e_1, with the reflection sign
/// chosen to avoid cancellation; fully deterministic.
ComplexMatrix complement_basis(const UnitVector& c);

/// Length-(n-1) ascending spectrum of A compressed onto the complement of
/// c, plus the ambiguity flag of the drop-smallest deflation (always false
/// in Restriction mode).
struct ProjectedSpectrum {
  RealVector values;
  bool ambiguous_drop = false;
};

ProjectedSpectrum projected_spectrum(const HermitianMatrix& a,
                                     const UnitVector& c,
                                     DeflationMode mode = DeflationMode::Restriction);

/// Row j = projected_spectrum(a, c_j, mode) for each basis column c_j.
/// Columns are processed across worker threads.
MinorSpectra projected_spectra(const HermitianMatrix& a,
                               const OrthonormalBasis& c,
                               DeflationMode mode = DeflationMode::Restriction);

/// R(i, j) estimates |S(j, i)|^2 where S = CQ (rows index eigenvalues,
/// columns index basis vectors), computed from the eigenvalues of A and of
/// its projections onto the complements of the basis columns. With C = I
/// this reduces to eigenvector_magnitudes(a). Degeneracy handling matches
/// eigenvector_magnitudes.
SquaredMagnitudes basis_overlap_magnitudes(const HermitianMatrix& a,
                                           const OrthonormalBasis& c,
                                           DeflationMode mode = DeflationMode::Restriction);

}  // namespace eigenid
