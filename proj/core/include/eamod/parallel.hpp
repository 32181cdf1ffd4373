#pragma once

#include <cstddef>
#include <functional>

namespace eamod {

/// Worker count: EAMOD_THREADS when set to a positive integer, otherwise
/// hardware concurrency.
unsigned worker_count();

/// Runs body(i) for every i in [0, n). Each index is visited exactly once;
/// callers write results into per-index slots so output order never depends
/// on scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace eamod
