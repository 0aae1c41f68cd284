#pragma once

#include <functional>

namespace eforce {

/// Thread count resolution: explicit request > NOISE_BUDGET_THREADS > a
/// small hardware-based default.  Always >= 1.
int resolve_threads(int requested = 0);

/// Run fn(i) for i in [0, n) on up to n_threads threads.  Work items must
/// write to disjoint, preallocated storage; ordering is unspecified, results
/// must not depend on it.  Exceptions are captured and rethrown (first one).
void parallel_for(int n, const std::function<void(int)>& fn, int n_threads = 0);

}  // namespace eforce
