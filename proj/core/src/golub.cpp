#include "eigenid/golub.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gap_products.hpp"

namespace eigenid {

namespace {

std::optional<Index> first_interlacing_violation(const RealVector& w, const RealVector& x,
                                                 double tol) {
  for (Index k = 0; k < x.size(); ++k)
    if (x(k) < w(k) - tol || x(k) > w(k + 1) + tol) return k;
  return std::nullopt;
}

void check_ascending(const RealVector& w) {
  for (Index i = 1; i < w.size(); ++i)
    if (w(i) < w(i - 1)) throw ShapeError("eigenvalues must be ascending");
}

}  // namespace

bool check_interlacing(const RealVector& w, const RealVector& x, double tol) {
  if (x.size() != w.size() - 1)
    throw ShapeError("expected " + std::to_string(w.size() - 1) + " targets, got " +
                     std::to_string(x.size()));
  return !first_interlacing_violation(w, x, tol).has_value();
}

RealVector constraint_weights(const RealVector& w, const RealVector& x) {
  const Index n = w.size();
  if (n == 0) throw DimensionError("empty spectrum");
  if (x.size() != n - 1)
    throw ShapeError("expected " + std::to_string(n - 1) + " targets, got " +
                     std::to_string(x.size()));
  check_ascending(w);

  const double gap_tol = gap_tolerance(w);
  for (Index i = 1; i < n; ++i)
    if (w(i) - w(i - 1) <= gap_tol)
      throw DegeneracyError("eigenvalue gap " + std::to_string(w(i) - w(i - 1)) +
                            " at index " + std::to_string(i - 1) +
                            " underflows the gap tolerance");

  const double spread = (n > 1) ? w(n - 1) - w(0) : 0.0;
  const double snap_tol = tol::snap_scale * spread;
  if (auto k = first_interlacing_violation(w, x, snap_tol))
    throw InfeasibilityError(
        "target " + std::to_string(x(*k)) + " at index " + std::to_string(*k) +
            " lies outside [" + std::to_string(w(*k)) + ", " + std::to_string(w(*k + 1)) + "]",
        static_cast<std::ptrdiff_t>(*k));

  const bool use_log = n > detail::log_product_threshold;
  RealVector weights(n);
  bool clamped = false;
  std::vector<double> numerator(static_cast<std::size_t>(n - 1));
  std::vector<double> denominator(static_cast<std::size_t>(n - 1));
  for (Index j = 0; j < n; ++j) {
    // A target pinned to w_j (within the snap tolerance) zeroes d_j^2.
    bool snapped = false;
    for (Index k = 0; k < n - 1; ++k) {
      numerator[static_cast<std::size_t>(k)] = w(j) - x(k);
      if (std::abs(w(j) - x(k)) <= snap_tol) snapped = true;
    }
    if (snapped) {
      weights(j) = 0.0;
      continue;
    }
    for (Index k = 0, m = 0; k < n; ++k)
      if (k != j) denominator[static_cast<std::size_t>(m++)] = w(j) - w(k);
    double d2 = detail::gap_ratio(numerator, denominator, use_log);
    if (d2 < 0.0) {
      if (d2 < -tol::weight_clamp)
        throw InfeasibilityError("weight " + std::to_string(j) + " is negative (" +
                                     std::to_string(d2) + "), targets are infeasible",
                                 static_cast<std::ptrdiff_t>(-1));
      d2 = 0.0;
      clamped = true;
    }
    weights(j) = std::min(d2, 1.0);
  }
  if (clamped && weights.sum() > 0.0) weights /= weights.sum();
  return weights;
}

ConstraintRecovery recover_constraint(const SpectralDecomposition& decomp,
                                      const RealVector& targets, const ComplexVector& signs) {
  const Index n = decomp.size();
  RealVector weights = constraint_weights(decomp.eigenvalues, targets);

  ComplexVector phases;
  if (signs.size() == 0) {
    phases = ComplexVector::Ones(n);
  } else {
    if (signs.size() != n)
      throw ShapeError("expected " + std::to_string(n) + " signs, got " +
                       std::to_string(signs.size()));
    for (Index j = 0; j < n; ++j)
      if (std::abs(std::abs(signs(j)) - 1.0) > tol::unit_norm)
        throw NormalizationError("sign " + std::to_string(j) + " is not a unit phase");
    phases = signs;
  }

  ComplexVector d(n);
  for (Index j = 0; j < n; ++j) d(j) = phases(j) * std::sqrt(weights(j));
  ComplexVector c = decomp.eigenvectors * d;
  return ConstraintRecovery{targets, std::move(weights), std::move(phases),
                            UnitVector::normalized(std::move(c))};
}

RealVector stationary_values(const HermitianMatrix& a, const UnitVector& c) {
  return projected_spectrum(a, c, DeflationMode::Restriction).values;
}

}  // namespace eigenid
