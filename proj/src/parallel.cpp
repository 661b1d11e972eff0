#include "tfss/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tfss {

namespace {

int env_worker_count() {
  if (const char* s = std::getenv("TFSS_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_override{0};

}  // namespace

int worker_count() {
  int n = g_override.load(std::memory_order_relaxed);
  if (n >= 1) return n;
  static const int kDefault = env_worker_count();
  return kDefault;
}

void set_worker_count(int n) {
  g_override.store(n >= 1 ? n : 0, std::memory_order_relaxed);
}

void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  const int workers = std::min<std::int64_t>(worker_count(), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) {
    std::int64_t begin = n * w / workers;
    std::int64_t end = n * (w + 1) / workers;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  fn(0, n / workers);
  for (auto& t : pool) t.join();
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  parallel_chunks(n, [&fn](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace tfss
