#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace maxsemi {

// Runs body(0..count-1), optionally fanned across worker threads in static
// contiguous chunks. Each index must draw randomness only from its own
// substream, so results do not depend on the worker count. The first
// exception thrown by any body is rethrown after all threads join.
inline void parallel_replicates(std::size_t count, int workers,
                                const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count < 2) {
    for (std::size_t r = 0; r < count; ++r) body(r);
    return;
  }
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  const std::size_t chunk = (count + n_threads - 1) / n_threads;

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t r = begin; r < end; ++r) body(r);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace maxsemi
