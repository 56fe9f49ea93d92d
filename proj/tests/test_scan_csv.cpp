#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <vector>

#include "superb/csv.hpp"
#include "superb/figures.hpp"
#include "superb/scan.hpp"

using namespace superb;

TEST_SUITE("scan_csv") {

TEST_CASE("csv value formatting is fixed at 15 significant digits") {
  CHECK(csv::format_value(1.0 / 3.0) == "0.333333333333333");
  CHECK(csv::format_value(1.0) == "1");
  CHECK(csv::format_value(0.787) == "0.787");
  CHECK(csv::format_value(1e-12) == "1e-12");
}

TEST_CASE("csv rows join with commas and newline endings") {
  std::ostringstream os;
  csv::write_header(os, {"r", "p"});
  csv::write_row(os, {"0.5", "1.25"});
  CHECK(os.str() == "r,p\n0.5,1.25\n");
}

TEST_CASE("for_each_index fills every slot under both policies") {
  std::vector<int> serial(1000), parallel(1000);
  for_each_index(serial.size(), ExecPolicy::serial,
                 [&](std::size_t i) { serial[i] = int(3 * i + 1); });
  for_each_index(parallel.size(), ExecPolicy::parallel,
                 [&](std::size_t i) { parallel[i] = int(3 * i + 1); });
  CHECK(serial == parallel);
}

TEST_CASE("SUPERB_THREADS caps the parallel width") {
  setenv("SUPERB_THREADS", "1", 1);
  CHECK(effective_threads() == 1);
  unsetenv("SUPERB_THREADS");
  CHECK(effective_threads() >= 1);
}

TEST_CASE("r_grid construction") {
  const auto g = figures::r_grid(0.0, 1.0, 0.01);
  CHECK(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK_THROWS_AS(figures::r_grid(0.5, 0.2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(figures::r_grid(0.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("scaling curves agree across policies") {
  const auto grid = figures::r_grid(0.0, 1.0, 0.05);
  const auto serial = figures::scaling_curve(figures::Family::phase, 3, 4,
                                             grid, ExecPolicy::serial);
  const auto parallel = figures::scaling_curve(figures::Family::phase, 3, 4,
                                               grid, ExecPolicy::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].p == parallel[i].p);
    CHECK(serial[i].r == parallel[i].r);
  }
}

}  // TEST_SUITE
