#pragma once

#include <cstddef>
#include <functional>

namespace frosl {

// Thread cap: min(FROZEN_SPECTRAL_THREADS, hardware_concurrency), at
// least 1.  Zero or unset means the hardware count.
int max_threads();

// Runs fn(i) for i in [0, n).  Tasks must be independent; completion
// order is irrelevant to the caller, so results stay deterministic as
// long as fn writes only to slot i.  Exceptions are rethrown (first one
// by index).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace frosl
