#pragma once

#include <cstddef>
#include <functional>

#include "eigenid/types.hpp"

namespace eigenid {

/// Worker cap: EIGENID_THREADS when set to a positive integer, otherwise
/// (unset, "0", or unparsable) the hardware concurrency.
std::size_t worker_count();

/// Runs body(0..count-1), possibly across worker threads. Each index is
/// executed exactly once and bodies must write disjoint outputs, so the
/// result is identical to sequential evaluation. If any body throws, the
/// exception of the lowest failing index is rethrown.
void parallel_for(Index count, const std::function<void(Index)>& body);

}  // namespace eigenid
