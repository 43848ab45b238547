#pragma once

#include <cstddef>
#include <functional>

namespace borromean {

/// Worker count from BORROMEAN_JOBS, else the hardware concurrency.
int default_jobs();

/// Calls body(index, worker) for every index in [0, n) on `jobs` threads.
/// Indices are handed out in small chunks; the first exception thrown by
/// any worker is rethrown after all workers stop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t, int)>& body);

}  // namespace borromean
