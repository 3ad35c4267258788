// Indexed parallel map over pure tasks. Results are collected by index, so
// the output is identical regardless of scheduling; SEMIGROUP_LAB_THREADS
// caps the worker count.
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sgl {

inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (hw > 8) hw = 8;
  if (const char* env = std::getenv("SEMIGROUP_LAB_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

template <typename Result>
std::vector<Result> parallel_map(std::size_t n,
                                 const std::function<Result(std::size_t)>& task) {
  std::vector<Result> results(n);
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      results[i] = task(i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace sgl
