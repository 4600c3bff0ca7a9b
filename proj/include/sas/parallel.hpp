#pragma once

#include <cstddef>
#include <functional>

namespace sas {

// Worker count: SAS_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Exceptions
// are rethrown on the calling thread (the one for the smallest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sas
