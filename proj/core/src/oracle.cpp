#include "eigenid/oracle.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <string>

#include "eigenid/spectral.hpp"

namespace eigenid {

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

HermitianMatrix random_hermitian(Index n, std::uint64_t seed, bool complex_entries) {
  if (n < 1) throw DimensionError("matrix size must be positive, got " + std::to_string(n));
  RandomStream stream(seed);
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(stream.uniform(), 0.0);
  if (complex_entries) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j).imag(stream.uniform());
  }
  ComplexMatrix a = m + m.adjoint();  // exactly Hermitian in floating point
  return HermitianMatrix(std::move(a));
}

OrthonormalBasis random_orthonormal(Index n, std::uint64_t seed) {
  if (n < 1) throw DimensionError("matrix size must be positive, got " + std::to_string(n));
  RandomStream stream(seed);
  RealMatrix gauss(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gauss(i, j) = stream.gaussian();
  Eigen::HouseholderQR<RealMatrix> qr(gauss);
  RealMatrix q = qr.householderQ();
  RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Forcing the R diagonal positive makes the factor unique, so the basis
  // is a deterministic function of the Gaussian draw.
  for (Index j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return OrthonormalBasis(q);
}

SquaredMagnitudes reference_magnitudes(const HermitianMatrix& a) {
  SpectralDecomposition decomp = eigendecompose(a);
  const Index n = a.size();
  SquaredMagnitudes r;
  r.values.resize(n, n);
  r.valid.resize(n, n);
  r.valid.setConstant(true);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) r.values(i, j) = std::norm(decomp.eigenvectors(j, i));
  return r;
}

double max_abs_diff(const SquaredMagnitudes& r, const SquaredMagnitudes& ref) {
  if (r.rows() != ref.rows() || r.cols() != ref.cols())
    throw ShapeError("cannot compare a " + std::to_string(r.rows()) + "x" +
                     std::to_string(r.cols()) + " table against " +
                     std::to_string(ref.rows()) + "x" + std::to_string(ref.cols()));
  bool any = false;
  double max_diff = 0.0;
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) {
      if (!r.valid(i, j) || !ref.valid(i, j)) continue;
      any = true;
      max_diff = std::max(max_diff, std::abs(r.values(i, j) - ref.values(i, j)));
    }
  }
  if (!any) throw DegeneracyError("no valid entries to compare");
  return max_diff;
}

}  // namespace eigenid
