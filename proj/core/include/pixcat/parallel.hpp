#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pixcat {

// Worker count for internal parallelism: PIXCAT_THREADS when set, else all cores.
inline std::size_t thread_budget() {
  if (const char* env = std::getenv("PIXCAT_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return (std::size_t)v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Striped parallel loop over [0, n). Pure bodies only.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min(thread_budget(), n);
  if (workers <= 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pixcat
