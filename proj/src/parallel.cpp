#include "aplab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace aplab {

std::size_t max_threads() {
  if (const char* env = std::getenv("APLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::size_t chunk_count(std::size_t n) {
  // Fixed partition independent of the thread count.
  return std::min<std::size_t>(n, 64);
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t* n_chunks_out) {
  const std::size_t chunks = chunk_count(n);
  if (n_chunks_out) {
    *n_chunks_out = chunks;
  }
  if (chunks == 0) {
    return;
  }
  auto chunk_bounds = [n, chunks](std::size_t c) {
    const std::size_t lo = n * c / chunks;
    const std::size_t hi = n * (c + 1) / chunks;
    return std::pair<std::size_t, std::size_t>(lo, hi);
  };

  const std::size_t workers = std::min(max_threads(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      const auto [lo, hi] = chunk_bounds(c);
      body(c, lo, hi);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::mutex err_mutex;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= chunks || failed.load()) {
          return;
        }
        try {
          const auto [lo, hi] = chunk_bounds(c);
          body(c, lo, hi);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) {
            first_error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace aplab
