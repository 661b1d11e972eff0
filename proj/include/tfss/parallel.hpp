#pragma once

#include <cstdint>
#include <functional>

namespace tfss {

/// Number of worker threads used by the parallel loops. Defaults to the
/// TFSS_THREADS environment variable, falling back to the hardware
/// concurrency. All loops produce bitwise-identical results for any count.
int worker_count();

/// Overrides the worker count for this process; n < 1 restores the default.
void set_worker_count(int n);

/// Runs fn(i) for every i in [0, n). Indices are split into contiguous
/// chunks, one per worker; fn must only touch state owned by index i.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

/// Runs fn(begin, end) on contiguous chunks covering [0, n). Use when the
/// body needs per-worker scratch that should be set up once per chunk.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace tfss
