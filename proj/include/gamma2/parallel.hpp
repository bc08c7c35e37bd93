#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace g2 {

/// Global worker-count knob. 0 means "use hardware concurrency".
/// The GAMMA2_THREADS environment variable is the fallback when unset.
int worker_threads();
void set_worker_threads(int n);

/// Runs fn(i) for i in [0, n) across the configured workers. Results must be
/// written to pre-sized slots so the outcome is independent of scheduling.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace g2
