#include "smflow/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace smflow {

std::size_t worker_count() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("SMFLOW_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && std::size_t(cap) < n) n = std::size_t(cap);
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t nw = std::min(worker_count(), n ? n : 1);
  if (nw <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t t = 0; t < nw; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace smflow
