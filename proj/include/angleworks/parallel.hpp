#pragma once

#include <cstddef>
#include <functional>

namespace aw {

// Worker count: hardware concurrency capped by ANGLEWORKS_THREADS.
unsigned thread_budget();

// Runs body(i) for i in [0, count). Each index runs exactly once; the
// first exception is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace aw
