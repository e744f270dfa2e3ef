#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace ksc {

// Runs fn(i) for i in [0, count) on up to `jobs` threads (jobs <= 0 means
// hardware concurrency). Work items must be independent; results are written
// by index, so the outcome does not depend on the thread count.
inline void parallel_for(int count, int jobs,
                         const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([=, &fn] {
      for (int i = w; i < count; i += jobs) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace ksc
