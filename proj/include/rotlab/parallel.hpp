#pragma once

#include <cstddef>
#include <functional>

namespace rotlab {

/// Threads used for sweeps: min(hardware_concurrency, ROTLAB_THREADS).
unsigned thread_budget();

/// Runs fn(i) for i in [0, count) across the thread budget. Cells must be
/// independent; exceptions are captured and the first one rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace rotlab
