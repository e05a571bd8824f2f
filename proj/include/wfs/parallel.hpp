#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace wfs {

/// Worker count for engine scans. Defaults to $WFS_JOBS, else 1.
unsigned jobs();
void set_jobs(unsigned n);

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into per-index slots, so output never depends on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned workers = std::min<std::size_t>(jobs(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
}

}  // namespace wfs
