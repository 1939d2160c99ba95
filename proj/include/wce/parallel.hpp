/*
 * Thread pool helpers
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_PARALLEL_HPP
#define WCE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wce {

// Resolve a requested thread count; <= 0 means hardware concurrency.
int resolve_threads(int requested);

// Run body(0..count-1) on up to `threads` workers. Work items are claimed
// from a shared atomic counter; callers keep determinism by writing results
// into preallocated per-index slots. The first exception thrown by any worker
// is rethrown after all workers have stopped.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace wce

#endif
