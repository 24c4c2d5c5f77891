#pragma once

#include <cstddef>
#include <functional>

namespace mfpc {

// Hardware concurrency capped by the MFPC_THREADS environment variable.
std::size_t worker_threads();

// Number of contiguous chunks parallel_for will split [0, n) into.
std::size_t parallel_chunk_count(std::size_t n);

// Runs fn(begin, end, chunk_index) over contiguous chunks of [0, n), one
// task per worker. fn must only write state owned by its own range or chunk
// slot; results are then independent of the execution schedule.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace mfpc
