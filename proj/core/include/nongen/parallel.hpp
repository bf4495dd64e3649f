#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace nongen {

// Runs fn(i) for i in [0, count) across hardware threads in fixed chunks.
// Results must be written to disjoint, preallocated slots so parallel and
// serial executions are indistinguishable.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace nongen
