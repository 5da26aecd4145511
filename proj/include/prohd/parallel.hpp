#pragma once

#include <cstddef>
#include <functional>

namespace prohd {

/// Default worker count: PROHD_THREADS if set and positive, else hardware concurrency.
std::size_t default_thread_count();

/// Current worker budget used by every parallel kernel in the library.
std::size_t thread_count();

/// Override the worker budget process-wide; 0 restores the default.
void set_thread_count(std::size_t n);

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each.
///
/// Chunk boundaries depend on the thread budget, so callers must only write
/// per-index results; reductions happen afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 256);

} // namespace prohd
