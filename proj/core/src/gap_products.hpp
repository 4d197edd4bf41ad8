#pragma once

// Internal product engine for ratios of eigenvalue-gap products. Not part
// of the installed API.

#include <vector>

#include "eigenid/types.hpp"

namespace eigenid::detail {

// prod(numerator) / prod(denominator). Factors are multiplied
// smallest-magnitude first; with use_log set (or when the direct route
// over/underflows) magnitudes accumulate as log + sign instead. A zero
// numerator factor yields exactly 0; a zero denominator factor throws
// DegeneracyError (callers gate on the gap tolerance first).
double gap_ratio(std::vector<double> numerator, std::vector<double> denominator,
                 bool use_log);

// Matrix dimension above which products switch to log accumulation.
inline constexpr Index log_product_threshold = 64;

}  // namespace eigenid::detail
