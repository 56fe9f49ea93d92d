#include <doctest.h>

#include <algorithm>
#include <bit>
#include <vector>

#include "superb/product_state.hpp"
#include "superb/spin_algebra.hpp"
#include "test_helpers.hpp"

using namespace superb;
using product::Axis;
using product::BlochQubit;
using product::decompose;

TEST_SUITE("product_state") {

TEST_CASE("single qubit weights") {
  for (double r : {0.0, 0.3, 1.0}) {
    const auto w = decompose(1, BlochQubit(r, Axis::z));
    REQUIRE(w.blocks.size() == 1);
    CHECK(w.blocks[0].w(0) == doctest::Approx(0.5 * (1.0 - r)));
    CHECK(w.blocks[0].w(1) == doctest::Approx(0.5 * (1.0 + r)));
  }
}

TEST_CASE("pure two-qubit state populates only the stretched weight") {
  const auto w = decompose(2, BlochQubit(1.0, Axis::z));
  const auto& top = w.block(SpinLabel(2));
  CHECK(top.w(2) == doctest::Approx(1.0));
  CHECK(top.w(1) == 0.0);
  CHECK(top.w(0) == 0.0);
  CHECK(w.block(SpinLabel(0)).w(0) == 0.0);
}

TEST_CASE("N = 3 at r = 0.5: normalization and weight ratio") {
  const auto w = decompose(3, BlochQubit(0.5, Axis::z));
  CHECK(w.total() == doctest::Approx(1.0).epsilon(1e-12));
  const auto& top = w.block(SpinLabel(3));
  CHECK(top.w(3) / top.w(2) == doctest::Approx(3.0));  // r+/r- at r = 1/2
}

TEST_CASE("normalization across sizes and the r grid") {
  for (int n : {1, 2, 5, 17, 38, 60})
    for (int i = 0; i <= 10; ++i) {
      const auto w = decompose(n, BlochQubit(0.1 * i, Axis::z));
      CHECK(std::abs(w.total() - 1.0) < 1e-12);
      for (const auto& b : w.blocks) CHECK(b.w.minCoeff() >= 0.0);
    }
}

TEST_CASE("limit consistency near r = 1") {
  for (int n : {2, 5, 9}) {
    const auto w1 = decompose(n, BlochQubit(1.0, Axis::z));
    const auto w2 = decompose(n, BlochQubit(1.0 - 1e-12, Axis::z));
    for (std::size_t b = 0; b < w1.blocks.size(); ++b)
      CHECK((w1.blocks[b].w - w2.blocks[b].w).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("rejects zero copies") {
  CHECK_THROWS_AS(decompose(0, BlochQubit(0.5, Axis::z)),
                  std::invalid_argument);
  CHECK_THROWS_AS(BlochQubit(1.5, Axis::z), std::invalid_argument);
}

TEST_CASE("dense oracle: spectra per J_z sector match the block weights") {
  // The diagonal of rho^{xN} along z groups by total J_z eigenvalue m;
  // each sector must carry the multiset {w_{l,m} : l >= |m|, d_l copies}.
  for (int n = 1; n <= 6; ++n)
    for (double r : {0.0, 0.2, 0.5, 0.8, 1.0}) {
      const auto w = decompose(n, BlochQubit(r, Axis::z));
      const Eigen::MatrixXcd dense =
          test_helpers::kron_power(test_helpers::qubit_z(r), n);
      for (int two_m = -n; two_m <= n; two_m += 2) {
        std::vector<double> sector;
        for (long idx = 0; idx < dense.rows(); ++idx) {
          const int ups = n - std::popcount(static_cast<unsigned long>(idx));
          if (2 * ups - n == two_m) sector.push_back(dense(idx, idx).real());
        }
        std::vector<double> expected;
        for (const auto& b : w.blocks) {
          if (b.l.two_j < std::abs(two_m)) continue;
          const double weight = b.w((two_m + b.l.two_j) / 2);
          for (int copy = 0; copy < int(b.multiplicity + 0.5); ++copy)
            expected.push_back(weight);
        }
        std::sort(sector.begin(), sector.end());
        std::sort(expected.begin(), expected.end());
        REQUIRE(sector.size() == expected.size());
        for (std::size_t i = 0; i < sector.size(); ++i)
          CHECK(std::abs(sector[i] - expected[i]) < 1e-10);
      }
    }
}

TEST_CASE("dense oracle: full x-axis spectrum matches the weight multiset") {
  for (int n = 1; n <= 6; ++n)
    for (double r : {0.0, 0.4, 0.9}) {
      const auto w = decompose(n, BlochQubit(r, Axis::x));
      const Eigen::MatrixXcd dense =
          test_helpers::kron_power(test_helpers::qubit_x(r), n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
      std::vector<double> expected;
      for (const auto& b : w.blocks)
        for (int i = 0; i <= b.l.two_j; ++i)
          for (int copy = 0; copy < int(b.multiplicity + 0.5); ++copy)
            expected.push_back(b.w(i));
      std::sort(expected.begin(), expected.end());
      for (long i = 0; i < solver.eigenvalues().size(); ++i)
        CHECK(std::abs(solver.eigenvalues()(i) - expected[i]) < 1e-10);
    }
}

}  // TEST_SUITE
