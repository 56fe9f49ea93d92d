#pragma once

#include <cstddef>
#include <functional>

namespace superb {

/// Serial keeps the reference single-thread loop; Parallel runs the same
/// body under OpenMP. Both fill independent slots, so results are
/// bit-identical across policies and thread counts.
enum class ExecPolicy { serial, parallel };

/// Number of threads the parallel policy may use: omp_get_max_threads()
/// capped by the SUPERB_THREADS environment variable when set.
int effective_threads();

/// Runs body(i) for i in [0, n). The body must only write to state owned
/// by index i.
void for_each_index(std::size_t n, ExecPolicy policy,
                    const std::function<void(std::size_t)>& body);

}  // namespace superb
