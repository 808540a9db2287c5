#pragma once

#include <functional>

#include <Eigen/Core>

namespace dilatekit::detail {

/// Worker count: DILATEKIT_THREADS if set (floored at 1), else the
/// hardware concurrency.
int thread_cap();

/// Runs body(i) for i in [0, n). Iterations must be independent; each
/// writes its own output slot, so results do not depend on scheduling.
void parallel_for(Eigen::Index n, const std::function<void(Eigen::Index)>& body);

}  // namespace dilatekit::detail
