#include "superb/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace superb {

int effective_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("SUPERB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (...) {
      // ignore malformed values
    }
  }
  return std::max(n, 1);
}

void for_each_index(std::size_t n, ExecPolicy policy,
                    const std::function<void(std::size_t)>& body) {
  if (policy == ExecPolicy::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int threads = effective_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(static_cast<std::size_t>(i));
}

}  // namespace superb
