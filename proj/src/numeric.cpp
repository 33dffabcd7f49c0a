#include "cavdress/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cavdress {

int thread_budget() {
  static const int cached = [] {
    const char* env = std::getenv("CAVDRESS_THREADS");
    long v = 0;
    if (env && *env) {
      char* end = nullptr;
      v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 0) v = 0;
    }
    if (v == 0) {
      unsigned hc = std::thread::hardware_concurrency();
      v = hc ? static_cast<long>(hc) : 1;
    }
    return static_cast<int>(v);
  }();
  return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), n);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = n * t / nthreads;
      const std::size_t hi = n * (t + 1) / nthreads;
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cavdress
