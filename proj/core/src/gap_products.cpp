#include "gap_products.hpp"

#include <algorithm>
#include <cmath>

#include "eigenid/errors.hpp"

namespace eigenid::detail {

namespace {

bool contains_zero(const std::vector<double>& factors) {
  return std::find(factors.begin(), factors.end(), 0.0) != factors.end();
}

struct LogProduct {
  double log_mag = 0.0;
  bool negative = false;
};

LogProduct log_product(const std::vector<double>& factors) {
  LogProduct p;
  for (double f : factors) {
    if (f < 0.0) p.negative = !p.negative;
    p.log_mag += std::log(std::abs(f));
  }
  return p;
}

double direct_product(std::vector<double>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  double p = 1.0;
  for (double f : factors) p *= f;
  return p;
}

double log_ratio(const std::vector<double>& numerator,
                 const std::vector<double>& denominator) {
  LogProduct num = log_product(numerator);
  LogProduct den = log_product(denominator);
  double mag = std::exp(num.log_mag - den.log_mag);
  return (num.negative != den.negative) ? -mag : mag;
}

}  // namespace

double gap_ratio(std::vector<double> numerator, std::vector<double> denominator,
                 bool use_log) {
  if (contains_zero(denominator))
    throw DegeneracyError("zero eigenvalue gap in gap-ratio denominator");
  if (contains_zero(numerator)) return 0.0;
  if (!use_log) {
    double ratio = direct_product(numerator) / direct_product(denominator);
    // Clustered spectra can over/underflow even short direct products; a
    // vanished or non-finite ratio here can only come from that.
    if (std::isfinite(ratio) && ratio != 0.0) return ratio;
  }
  return log_ratio(numerator, denominator);
}

}  // namespace eigenid::detail
