#include "mfpc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mfpc/util.hpp"

namespace mfpc {

std::size_t worker_threads() {
  std::size_t count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("MFPC_THREADS")) {
    try {
      const auto requested = static_cast<std::size_t>(parse_uint(cap));
      if (requested >= 1) count = std::min(count, requested);
    } catch (const std::invalid_argument&) {
      // ignore malformed values, keep the hardware default
    }
  }
  return count;
}

std::size_t parallel_chunk_count(std::size_t n) {
  if (n == 0) return 0;
  return std::min(worker_threads(), n);
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  const std::size_t chunks = parallel_chunk_count(n);
  if (chunks == 0) return;
  if (chunks == 1) {
    fn(0, n, 0);
    return;
  }
  const std::size_t chunk_size = (n + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(n, begin + chunk_size);
    if (begin >= end) continue;
    pool.emplace_back([&, begin, end, c] {
      try {
        fn(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace mfpc
