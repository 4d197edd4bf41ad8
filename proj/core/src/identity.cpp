#include "eigenid/identity.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "eigenid/parallel.hpp"
#include "gap_products.hpp"

namespace eigenid {

HermitianMatrix principal_minor(const HermitianMatrix& a, Index j) {
  const Index n = a.size();
  if (n < 2)
    throw DimensionError("cannot take a principal minor of a " + std::to_string(n) +
                         "x" + std::to_string(n) + " matrix");
  if (j < 0 || j >= n)
    throw IndexError("minor index " + std::to_string(j) + " out of range [0, " +
                     std::to_string(n) + ")");
  ComplexMatrix m(n - 1, n - 1);
  for (Index r = 0, mr = 0; r < n; ++r) {
    if (r == j) continue;
    for (Index c = 0, mc = 0; c < n; ++c) {
      if (c == j) continue;
      m(mr, mc) = a(r, c);
      ++mc;
    }
    ++mr;
  }
  return HermitianMatrix(std::move(m));
}

MinorSpectra minor_spectra(const HermitianMatrix& a) {
  const Index n = a.size();
  if (n < 2)
    throw DimensionError("minor spectra need n >= 2, got n = " + std::to_string(n));
  MinorSpectra spectra;
  spectra.values.resize(n, n - 1);
  spectra.provenance = SpectraProvenance::MinorDeletion;
  spectra.ambiguous_drop.assign(static_cast<std::size_t>(n), false);
  parallel_for(n, [&](Index j) {
    try {
      spectra.values.row(j) = eigenvalues_of(principal_minor(a, j)).transpose();
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("minor " + std::to_string(j) + ": " + e.what(),
                             e.iterations_attempted());
    }
  });
  return spectra;
}

SquaredMagnitudes squared_magnitudes_from_spectra(const RealVector& w,
                                                  const MinorSpectra& x) {
  const Index n = w.size();
  if (x.rows() != n || x.cols() != n - 1)
    throw ShapeError("spectra table must be " + std::to_string(n) + "x" +
                     std::to_string(n - 1) + ", got " + std::to_string(x.rows()) + "x" +
                     std::to_string(x.cols()));

  const double gap_tol = gap_tolerance(w);
  const bool use_log = n > detail::log_product_threshold;

  // The denominator prod_{k != i}(w_i - w_k) depends on the row only; a
  // row whose smallest gap underflows the tolerance is poisoned wholesale.
  std::vector<bool> row_valid(static_cast<std::size_t>(n), true);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (k != i && std::abs(w(i) - w(k)) <= gap_tol) {
        row_valid[static_cast<std::size_t>(i)] = false;
        break;
      }
    }
  }

  SquaredMagnitudes result;
  result.values = RealMatrix::Zero(n, n);
  result.valid.resize(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) result.valid(i, j) = row_valid[static_cast<std::size_t>(i)];

  parallel_for(n, [&](Index i) {
    if (!row_valid[static_cast<std::size_t>(i)]) return;
    std::vector<double> denominator;
    denominator.reserve(static_cast<std::size_t>(n - 1));
    for (Index k = 0; k < n; ++k)
      if (k != i) denominator.push_back(w(i) - w(k));
    std::vector<double> numerator(static_cast<std::size_t>(n - 1));
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k + 1 < n; ++k)
        numerator[static_cast<std::size_t>(k)] = w(i) - x.values(j, k);
      double r = detail::gap_ratio(numerator, denominator, use_log);
      result.values(i, j) = std::clamp(r, 0.0, 1.0);
    }
  });
  return result;
}

SquaredMagnitudes eigenvector_magnitudes(const HermitianMatrix& a) {
  if (a.size() < 2)
    throw DimensionError("eigenvector magnitudes need n >= 2, got n = " +
                         std::to_string(a.size()));
  SpectralDecomposition decomp = eigendecompose(a);
  SquaredMagnitudes r = squared_magnitudes_from_spectra(decomp.eigenvalues, minor_spectra(a));
  if (!r.valid.any())
    throw DegeneracyError("spectrum is fully degenerate: no eigenvalue gap exceeds the gap tolerance");
  return r;
}

}  // namespace eigenid
