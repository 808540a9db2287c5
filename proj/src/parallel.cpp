#include "dilatekit/detail/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dilatekit::detail {

int thread_cap() {
  if (const char* env = std::getenv("DILATEKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
    return 1;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(Eigen::Index n, const std::function<void(Eigen::Index)>& body) {
  if (n <= 0) return;
  const int workers = std::min<Eigen::Index>(thread_cap(), n);
  if (workers <= 1 || n < 16) {
    for (Eigen::Index i = 0; i < n; ++i) body(i);
    return;
  }

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (Eigen::Index i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dilatekit::detail
