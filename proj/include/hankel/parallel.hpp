#pragma once

// Worker count from HANKEL_WORKERS and a static-stride parallel loop.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hankel {

inline constexpr const char* kWorkersEnv = "HANKEL_WORKERS";

inline unsigned worker_count() {
  if (const char* s = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Run f(i) for i in [0, n) on up to `workers` threads. Results must be written
// to per-index slots by f.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& f) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hankel
