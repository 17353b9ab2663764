#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qhopf {

/// Runs f(0..n-1) on up to `workers` threads; results come back in index order.
template <class R, class F>
std::vector<R> parallel_map(size_t n, int workers, F&& f) {
  std::vector<R> out(n);
  if (workers <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next = n;
        return;
      }
    }
  };
  int w = static_cast<int>(std::min<size_t>(static_cast<size_t>(workers), n));
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace qhopf
