#pragma once

#include <cstddef>
#include <functional>

namespace curvlab {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Bodies must only
// write to disjoint, pre-sized slots. The exception of the lowest failing
// index is rethrown, so results do not depend on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace curvlab
