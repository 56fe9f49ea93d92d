// Timing comparison of the serial reference loops against the OpenMP
// kernels: threshold grid scans and scaling curves. Not a correctness
// test; unit tests assert that both policies produce identical bits.

#include <chrono>
#include <cstdio>

#include "superb/figures.hpp"
#include "superb/scan.hpp"
#include "superb/thresholds.hpp"

using namespace superb;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(const char* label, double serial_ms, double parallel_ms) {
  std::printf("%-40s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              label, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", effective_threads());

  {
    const double s = time_ms([] {
      thresholds::r_star(thresholds::Family::phase, 60, 61,
                         ExecPolicy::serial);
    });
    const double p = time_ms([] {
      thresholds::r_star(thresholds::Family::phase, 60, 61,
                         ExecPolicy::parallel);
    });
    report("phase threshold scan N=60", s, p);
  }
  {
    const double s = time_ms([] {
      thresholds::r_star(thresholds::Family::universal, 100, 101,
                         ExecPolicy::serial);
    });
    const double p = time_ms([] {
      thresholds::r_star(thresholds::Family::universal, 100, 101,
                         ExecPolicy::parallel);
    });
    report("universal threshold scan N=100", s, p);
  }
  {
    const auto grid = figures::r_grid(0.0, 1.0, 0.0001);
    const double s = time_ms([&] {
      figures::scaling_curve(figures::Family::phase, 40, 41, grid,
                             ExecPolicy::serial);
    });
    const double p = time_ms([&] {
      figures::scaling_curve(figures::Family::phase, 40, 41, grid,
                             ExecPolicy::parallel);
    });
    report("phase scaling curve N=40, 10k points", s, p);
  }
  {
    const double s = time_ms([] { figures::fig4(ExecPolicy::serial); });
    const double p = time_ms([] { figures::fig4(ExecPolicy::parallel); });
    report("fig4 threshold sweep", s, p);
  }
  return 0;
}
