#pragma once

#include <cstddef>
#include <functional>

namespace hypmetric {

/// Worker count: hardware concurrency, capped by HYPMETRIC_THREADS when set.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Iterations must write only to their own
/// slot of a caller-owned buffer; reductions happen afterwards, serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hypmetric
