#include <doctest.h>

#include <cmath>

#include "superb/spin_algebra.hpp"

using namespace superb;
using spin::clebsch_gordan;

TEST_SUITE("spin_algebra") {

TEST_CASE("multiplicity matches small closed values") {
  CHECK(spin::multiplicity(4, SpinLabel(4)) == doctest::Approx(1.0));
  CHECK(spin::multiplicity(4, SpinLabel(2)) == doctest::Approx(3.0));
  CHECK(spin::multiplicity(4, SpinLabel(0)) == doctest::Approx(2.0));
  CHECK(spin::multiplicity(2, SpinLabel(0)) == doctest::Approx(1.0));
}

TEST_CASE("dimension count sum_j (2j+1) d_j = 2^M up to M = 100") {
  for (int m = 1; m <= 100; ++m) {
    double acc = 0.0;
    for (int two_j = m % 2; two_j <= m; two_j += 2)
      acc += (two_j + 1) * spin::multiplicity(m, SpinLabel(two_j));
    CHECK(std::abs(acc / std::ldexp(1.0, m) - 1.0) < 1e-9);
  }
}

TEST_CASE("multiplicity rejects off-ladder labels") {
  CHECK_THROWS_AS(spin::multiplicity(4, SpinLabel(1)), std::invalid_argument);
  CHECK_THROWS_AS(spin::multiplicity(4, SpinLabel(6)), std::invalid_argument);
  CHECK_THROWS_AS(spin::multiplicity(0, SpinLabel(0)), std::invalid_argument);
}

TEST_CASE("spin operator matrices") {
  const auto jz_half = spin::jz_matrix(SpinLabel(1));
  CHECK(jz_half(0, 0) == doctest::Approx(-0.5));
  CHECK(jz_half(1, 1) == doctest::Approx(0.5));
  const auto jx_half = spin::jx_matrix(SpinLabel(1));
  CHECK(jx_half(0, 1) == doctest::Approx(0.5));

  // l = 1: [J_x]_{0,1} = 1/sqrt(2)
  const auto jx_one = spin::jx_matrix(SpinLabel(2));
  CHECK(jx_one(1, 2) == doctest::Approx(1.0 / std::sqrt(2.0)));

  for (int two_l : {1, 2, 3, 7, 20}) {
    const auto jz = spin::jz_matrix(SpinLabel(two_l));
    const auto jx = spin::jx_matrix(SpinLabel(two_l));
    CHECK(std::abs(jz.trace()) < 1e-12);
    CHECK((jx - jx.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((jz - jz.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Clebsch-Gordan pinned values") {
  CHECK(clebsch_gordan(1, 1, 1, 1, 2, 2) == doctest::Approx(1.0));
  CHECK(clebsch_gordan(1, 1, 1, -1, 2, 0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, 1, 1, -1, 0, 0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, -1, 1, 1, 0, 0) ==
        doctest::Approx(-1.0 / std::sqrt(2.0)));

  // <j-1/2, m-1/2; 1/2 1/2 | j m> = sqrt((j+m)/(2j))
  for (int two_j : {1, 2, 3, 5, 8}) {
    for (int two_m = -two_j + 2; two_m <= two_j; two_m += 2) {
      const double expected = std::sqrt(double(two_j + two_m) / (2 * two_j));
      CHECK(clebsch_gordan(two_j - 1, two_m - 1, 1, 1, two_j, two_m) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("Clebsch-Gordan selection rules and rejection") {
  CHECK(clebsch_gordan(1, 1, 1, 1, 2, 0) == 0.0);   // M != m1+m2
  CHECK(clebsch_gordan(1, 1, 1, 1, 6, 2) == 0.0);   // triangle
  CHECK(clebsch_gordan(2, 2, 2, 2, 0, 4) == 0.0);   // |M| > J
  CHECK_THROWS_AS(clebsch_gordan(1, 3, 1, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(clebsch_gordan(2, 1, 1, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(clebsch_gordan(-2, 0, 1, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("Clebsch-Gordan unitarity, exhaustive for j1 + j2 <= 6") {
  for (int two_j1 = 1; two_j1 <= 8; ++two_j1)
    for (int two_j2 = 1; two_j1 + two_j2 <= 12; ++two_j2)
      for (int two_m1 = -two_j1; two_m1 <= two_j1; two_m1 += 2)
        for (int two_m2 = -two_j2; two_m2 <= two_j2; two_m2 += 2)
          for (int two_m1p = -two_j1; two_m1p <= two_j1; two_m1p += 2) {
            const int two_m2p = two_m1 + two_m2 - two_m1p;
            if (two_m2p < -two_j2 || two_m2p > two_j2) continue;
            double acc = 0.0;
            const int two_M = two_m1 + two_m2;
            for (int two_J = std::abs(two_j1 - two_j2);
                 two_J <= two_j1 + two_j2; two_J += 2)
              acc += clebsch_gordan(two_j1, two_m1, two_j2, two_m2, two_J,
                                    two_M) *
                     clebsch_gordan(two_j1, two_m1p, two_j2, two_m2p, two_J,
                                    two_M);
            const double expected = (two_m1 == two_m1p) ? 1.0 : 0.0;
            CHECK(acc == doctest::Approx(expected).epsilon(1e-11));
          }
}

TEST_CASE("Wigner half-pi rotation for l = 1/2") {
  const auto w = spin::wigner_half_pi(SpinLabel(1));
  const double s = 1.0 / std::sqrt(2.0);
  // rows a = -1/2, +1/2; columns b = -1/2, +1/2 of d^{(1/2)}(pi/2)
  CHECK(w.entries(0, 0) == doctest::Approx(s));
  CHECK(w.entries(0, 1) == doctest::Approx(s));
  CHECK(w.entries(1, 0) == doctest::Approx(-s));
  CHECK(w.entries(1, 1) == doctest::Approx(s));
}

TEST_CASE("Wigner half-pi invariants") {
  for (int two_l : {1, 2, 3, 4, 7, 11, 24}) {
    const SpinLabel l(two_l);
    const auto& w = spin::wigner_half_pi_cached(l).entries;
    const int dim = two_l + 1;
    CHECK((w.transpose() * w - Eigen::MatrixXd::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    CHECK((w.transpose() * spin::jx_matrix(l) * w - spin::jz_matrix(l))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    // corner convention <l,l|l^x,l> > 0
    CHECK(w(dim - 1, dim - 1) > 0.0);
    // (W)_{a,b} = (-1)^{a-b} (W)_{b,a} and (W)_{-a,-b} = (-1)^{a-b} (W)_{a,b}
    for (int ia = 0; ia < dim; ++ia)
      for (int ib = 0; ib < dim; ++ib) {
        const double sign = ((ia - ib) % 2 == 0) ? 1.0 : -1.0;
        CHECK(w(ia, ib) == doctest::Approx(sign * w(ib, ia)).epsilon(1e-10));
        CHECK(w(dim - 1 - ia, dim - 1 - ib) ==
              doctest::Approx(sign * w(ia, ib)).epsilon(1e-10));
      }
  }
}

TEST_CASE("weighted exponential limits") {
  // r = 0: (1/2)^N identity on the block
  const auto e0 = spin::jx_weighted_exponential(SpinLabel(2), 0.0, 4);
  CHECK((e0 - std::ldexp(1.0, -4) * Eigen::MatrixXd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // r = 1, l = N/2: rank-one projector onto |l^x, l>
  const auto e1 = spin::jx_weighted_exponential(SpinLabel(4), 1.0, 4);
  const auto& w = spin::wigner_half_pi_cached(SpinLabel(4)).entries;
  const Eigen::VectorXd top = w.col(4);
  CHECK((e1 - top * top.transpose()).cwiseAbs().maxCoeff() < 1e-12);

  // r = 1, l < N/2: zero
  const auto ez = spin::jx_weighted_exponential(SpinLabel(2), 1.0, 4);
  CHECK(ez.cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(spin::jx_weighted_exponential(SpinLabel(2), 1.5, 4),
                  std::invalid_argument);
}

TEST_CASE("weighted exponential traces tie back to the decomposition") {
  for (int n : {3, 6, 9}) {
    for (double r : {0.0, 0.3, 0.9, 1.0}) {
      double acc = 0.0;
      for (int two_l = n % 2; two_l <= n; two_l += 2)
        acc += spin::multiplicity(n, SpinLabel(two_l)) *
               spin::jx_weighted_exponential(SpinLabel(two_l), r, n).trace();
      CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("superdiagonal fast path agrees with the full matrix") {
  for (int two_l : {1, 2, 5, 10})
    for (double r : {0.0, 0.2, 0.8, 0.99, 1.0}) {
      const int n = two_l + 4;
      const auto full =
          spin::jx_weighted_exponential(SpinLabel(two_l), r, n);
      const auto diag =
          spin::jx_weighted_exponential_superdiag(SpinLabel(two_l), r, n);
      for (int i = 0; i + 1 <= two_l; ++i)
        CHECK(diag(i) == doctest::Approx(full(i, i + 1)).epsilon(1e-13));
    }
}

TEST_CASE("block weight vector matches the per-entry form") {
  for (int n : {1, 5, 12, 41})
    for (double r : {0.0, 0.1, 0.5, 0.999, 1.0})
      for (int two_l = n % 2; two_l <= n; two_l += 2) {
        const auto v = spin::block_weights_vector(n, two_l, r);
        for (int i = 0; i <= two_l; ++i) {
          const double w = spin::block_weight(n, two_l, -two_l + 2 * i, r);
          CHECK(v(i) == doctest::Approx(w).epsilon(1e-12));
        }
      }
}

}  // TEST_SUITE
