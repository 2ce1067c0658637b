#pragma once

#include <cstddef>
#include <functional>

namespace rkhs {

/// Worker count: hardware concurrency, capped by the RKHS_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Calls body(i) for i in [0, count), split across worker_count() threads.
/// Iterations must be independent. The first exception thrown by any
/// iteration is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rkhs
