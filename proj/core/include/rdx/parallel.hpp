#pragma once

#include <functional>

namespace rdx {

/// Worker cap: RDX_THREADS if set (>= 1), otherwise hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n). Work items must write to disjoint state;
/// chunks are assigned deterministically so results never depend on the
/// worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace rdx
