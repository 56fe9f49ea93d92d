#include <doctest.h>

#include <cmath>

#include "superb/reduced_states.hpp"
#include "superb/spin_algebra.hpp"
#include "test_helpers.hpp"

using namespace superb;
using test_helpers::max_abs;

namespace {

Eigen::MatrixXcd basis_op(int dim, int i, int k) {
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  op(i, k) = 1.0;
  return op;
}

// The three displayed partial-trace matrices for the maximal-spin block,
// triplet basis (|1,-1>, |1,0>, |1,1>).
Eigen::Matrix3d alfabeto_diag(int m_qubits, double m) {
  const double M = m_qubits;
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
  t(0, 0) = (M - 2 * m) * (M - 2 * m - 2) / (4 * M * (M - 1));
  t(1, 1) = (M * M - 4 * m * m) / (2 * M * (M - 1));
  t(2, 2) = (M + 2 * m) * (M + 2 * m - 2) / (4 * M * (M - 1));
  return t;
}

Eigen::Matrix3d alfabeto_offdiag1(int m_qubits, double m) {
  const double M = m_qubits;
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
  const double root = std::sqrt((M - 2 * m) * (M + 2 * m + 2));
  t(0, 1) = t(1, 0) =
      (M - 2 * m - 2) * root / (2 * std::sqrt(2.0) * M * (M - 1));
  t(1, 2) = t(2, 1) = (M + 2 * m) * root / (2 * std::sqrt(2.0) * M * (M - 1));
  return t;
}

Eigen::Matrix3d alfabeto_offdiag2(int m_qubits, double m) {
  const double M = m_qubits;
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
  t(0, 2) = t(2, 0) = std::sqrt((M - 2 * m) * (M + 2 * m + 4) *
                                (M + 2 * m + 2) * (M - 2 * m - 2)) /
                      (4 * M * (M - 1));
  return t;
}

}  // namespace

TEST_SUITE("reduced_states") {

TEST_CASE("single site of the stretched state is spin-up") {
  for (int m : {1, 3, 6}) {
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    block(m, m) = 1.0;
    const auto s = reduced::single_site(block, SpinLabel(m), 1.0, m);
    CHECK(std::abs(s.rho(0, 0).real() - 1.0) < 1e-14);
    CHECK(std::abs(s.rho(1, 1)) < 1e-14);
  }
}

TEST_CASE("uniform weights reduce to the maximally mixed qubit") {
  const int m = 5;
  Eigen::MatrixXcd block =
      Eigen::MatrixXcd::Identity(m + 1, m + 1) / double(m + 1);
  const auto s = reduced::single_site(block, SpinLabel(m), 1.0, m);
  CHECK(max_abs(s.rho - 0.5 * Eigen::Matrix2cd::Identity()) < 1e-14);
}

TEST_CASE("universal output marginal lies on the z axis") {
  const auto out = universal::output_state(4, 5, 0.6);
  const auto s = reduced::single_site(out);
  const auto b = s.bloch();
  CHECK(std::abs(b(0)) < 1e-14);
  CHECK(std::abs(b(1)) < 1e-14);
  CHECK(b(2) == doctest::Approx(0.6 * universal::scaling_factor(4, 5, 0.6))
                    .epsilon(1e-12));
}

TEST_CASE("marginal of the product state returns the input qubit") {
  for (int n : {1, 2, 5, 8})
    for (double r : {0.0, 0.4, 1.0}) {
      const auto w = product::decompose(n, product::BlochQubit(r, product::Axis::z));
      const auto s = reduced::single_site(w);
      CHECK(s.bloch()(2) == doctest::Approx(r).epsilon(1e-12));
      CHECK(std::abs(s.bloch()(0)) < 1e-14);
    }
}

TEST_CASE("single site rejects malformed input") {
  Eigen::MatrixXcd rect = Eigen::MatrixXcd::Zero(3, 2);
  CHECK_THROWS_AS(reduced::single_site(rect, SpinLabel(2), 1.0, 4),
                  std::invalid_argument);
  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS(reduced::single_site(zero, SpinLabel(2), 1.0, 4),
                  std::invalid_argument);
}

TEST_CASE("two site of the stretched state is |up,up>") {
  for (int m : {2, 4, 7}) {
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    block(m, m) = 1.0;
    const auto t = reduced::two_site(block, m);
    Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
    expected(0, 0) = 1.0;
    CHECK(max_abs(t.rho - expected) < 1e-13);
  }
}

TEST_CASE("maximally mixed top block of two qubits gives the triplet third") {
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
  const auto t = reduced::two_site(block, 2);
  CHECK(max_abs(t.triplet - Eigen::Matrix3cd::Identity() / 3.0) < 1e-14);
}

TEST_CASE("two site reproduces the displayed partial-trace matrices") {
  for (int m_qubits : {2, 3, 4, 5, 6}) {
    const int two_j = m_qubits;
    for (int i = 0; i <= two_j; ++i) {
      const double m = -0.5 * two_j + i;
      const auto diag =
          reduced::two_site(basis_op(two_j + 1, i, i), m_qubits);
      CHECK(max_abs(diag.triplet.real() - alfabeto_diag(m_qubits, m)) <
            1e-13);
      CHECK(max_abs(diag.triplet.imag() * Eigen::Matrix3d::Ones()) < 1e-14);

      if (i + 1 <= two_j) {
        const auto off1 = reduced::two_site(
            basis_op(two_j + 1, i, i + 1) + basis_op(two_j + 1, i + 1, i),
            m_qubits);
        CHECK(max_abs(off1.triplet.real() - alfabeto_offdiag1(m_qubits, m)) <
              1e-13);
      }
      if (i + 2 <= two_j) {
        const auto off2 = reduced::two_site(
            basis_op(two_j + 1, i, i + 2) + basis_op(two_j + 1, i + 2, i),
            m_qubits);
        CHECK(max_abs(off2.triplet.real() - alfabeto_offdiag2(m_qubits, m)) <
              1e-13);
      }
    }
  }
}

TEST_CASE("entries further than two steps off the diagonal vanish") {
  const int m_qubits = 6;
  for (int gap = 3; gap <= 6; ++gap) {
    const auto t =
        reduced::two_site(basis_op(m_qubits + 1, 0, gap), m_qubits);
    CHECK(max_abs(t.rho) < 1e-15);
  }
}

TEST_CASE("two site is compatible with single site") {
  for (auto [n, m] : {std::pair{2, 3}, {4, 5}, {3, 4}})
    for (double r : {0.2, 0.7, 0.95}) {
      const auto uni = universal::output_state(n, m, r);
      const auto t2 = reduced::two_site(uni);
      // trace out the second qubit of the 4x4
      Eigen::Matrix2cd one = Eigen::Matrix2cd::Zero();
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
          for (int b = 0; b < 2; ++b) one(i, k) += t2.rho(2 * i + b, 2 * k + b);
      const auto s1 = reduced::single_site(uni);
      CHECK(max_abs(one - s1.rho) < 1e-10);

      const auto ph = phase::output_state(n, m, r);
      const auto p2 = reduced::two_site(ph);
      Eigen::Matrix2cd onep = Eigen::Matrix2cd::Zero();
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
          for (int b = 0; b < 2; ++b)
            onep(i, k) += p2.rho(2 * i + b, 2 * k + b);
      CHECK(max_abs(onep - reduced::single_site(ph).rho) < 1e-10);
    }
}

TEST_CASE("two-site outputs are swap symmetric") {
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  for (auto [n, m] : {std::pair{2, 3}, {4, 5}}) {
    const auto t = reduced::two_site(universal::output_state(n, m, 0.7));
    CHECK(max_abs(swap * t.rho * swap - t.rho) < 1e-12);
    const auto p = reduced::two_site(phase::output_state(n, m, 0.7));
    CHECK(max_abs(swap * p.rho * swap - p.rho) < 1e-12);
  }
}

TEST_CASE("universal two-site output commutes with J_z, phase does not") {
  const auto uni = reduced::two_site(universal::output_state(4, 5, 0.8));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (i != k) CHECK(std::abs(uni.triplet(i, k)) < 1e-12);

  // total J_x of two qubits, computational basis
  Eigen::Matrix4cd jx2 = Eigen::Matrix4cd::Zero();
  Eigen::Matrix2cd sx = Eigen::Matrix2cd::Zero();
  sx(0, 1) = sx(1, 0) = 1.0;
  jx2 = 0.5 * (test_helpers::kron(sx, Eigen::Matrix2cd::Identity()) +
               test_helpers::kron(Eigen::Matrix2cd::Identity(), sx));
  const auto ph = reduced::two_site(phase::output_state(3, 4, 0.6));
  CHECK(max_abs(jx2 * ph.rho - ph.rho * jx2) >= 1e-3);
}

TEST_CASE("singlet component of top-block reductions is zero") {
  const Eigen::Vector4cd singlet(0.0, 1.0 / std::sqrt(2.0),
                                 -1.0 / std::sqrt(2.0), 0.0);
  for (auto [n, m] : {std::pair{3, 4}, {4, 5}}) {
    const auto t = reduced::two_site(phase::output_state(n, m, 0.5));
    CHECK(std::abs((singlet.adjoint() * t.rho * singlet)(0, 0)) < 1e-12);
  }
}

}  // TEST_SUITE
