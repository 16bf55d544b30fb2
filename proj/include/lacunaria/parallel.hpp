#pragma once

#include <cstddef>
#include <functional>

namespace lacunaria {

/// Upper bound on worker threads used by library scans. 0 means "use the
/// hardware concurrency". Initialised from LACUNARIA_THREADS when set.
void set_thread_limit(std::size_t threads);
std::size_t thread_limit();

/// Calls body(i) for i in [0, count) across up to thread_limit() workers.
/// Callers write into per-index slots and reduce afterwards, so results do
/// not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace lacunaria
