#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hgraph {

// Index-ordered parallel map: results land at their index, so the output is
// identical no matter how many workers run. fn must be safe to call
// concurrently on distinct indices.
template <typename R, typename F>
std::vector<R> parallel_map(size_t count, int threads, F fn) {
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int workers = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace hgraph
