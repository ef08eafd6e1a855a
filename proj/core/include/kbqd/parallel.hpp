#pragma once

#include <cstdint>
#include <functional>

namespace kbqd {

/// Number of worker threads used by parallel loops. Initialized from the
/// KBQD_THREADS environment variable, falling back to the hardware count.
int num_threads();

/// Override the worker-thread count (0 restores the environment default).
void set_num_threads(int n);

/// Run fn over [begin, end) split into contiguous chunks, one worker per
/// chunk. Work assignment depends only on (begin, end, thread count), and
/// chunk results must be written to disjoint locations, so outputs are
/// independent of scheduling. Nested calls run inline on the caller thread.
void parallel_for_chunks(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t, std::int64_t)>& fn);

} // namespace kbqd
