#pragma once

#include <cstddef>
#include <functional>

namespace fractalis {

/// Worker count for internal loops: hardware concurrency, capped by the
/// FRACTALIS_THREADS environment variable when set.
std::size_t thread_count();

/// Calls body(i) for i in [0, n), split into contiguous chunks across
/// threads. Each index is written by exactly one call, so results do not
/// depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fractalis
