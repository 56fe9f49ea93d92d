#include "superb/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "superb/spin_algebra.hpp"

namespace superb::oracle {

namespace {

void check_size(int n_in, int m_out) {
  if (n_in < 1 || m_out < n_in)
    throw std::invalid_argument("oracle: need M >= N >= 1");
  if (n_in + m_out > kMaxTotalQubits)
    throw std::invalid_argument("oracle: 2^(M+N) exceeds the memory guard");
}

// Sector list after coupling one more qubit (appended as the least
// significant bit; bit value 0 = up).
std::vector<SchurSector> couple_qubit(const std::vector<SchurSector>& sectors,
                                      int rows_before) {
  std::vector<SchurSector> next;
  for (const auto& sec : sectors) {
    const int two_j = sec.j.two_j;
    for (int two_jn : {two_j + 1, two_j - 1}) {
      if (two_jn < 0) continue;
      Eigen::MatrixXd iso =
          Eigen::MatrixXd::Zero(2 * rows_before, two_jn + 1);
      for (int col = 0; col <= two_jn; ++col) {
        const int two_mn = -two_jn + 2 * col;
        for (int s : {+1, -1}) {  // appended qubit m = s/2
          const int two_m = two_mn - s;
          if (std::abs(two_m) > two_j) continue;
          const double cg =
              spin::clebsch_gordan(two_j, two_m, 1, s, two_jn, two_mn);
          if (cg == 0.0) continue;
          const int old_col = (two_m + two_j) / 2;
          const int bit = (s > 0) ? 0 : 1;
          for (int row = 0; row < rows_before; ++row) {
            const double v = sec.isometry(row, old_col);
            if (v != 0.0) iso(2 * row + bit, col) += cg * v;
          }
        }
      }
      next.push_back({SpinLabel(two_jn), std::move(iso)});
    }
  }
  return next;
}

// Moves logical qubit t (coupling order) onto physical qubit order[t].
Eigen::VectorXd permute_qubits(const Eigen::VectorXd& v, int n,
                               const std::vector<int>& order) {
  Eigen::VectorXd out(v.size());
  for (long i = 0; i < v.size(); ++i) {
    long target = 0;
    for (int t = 0; t < n; ++t) {
      const int bit = (i >> (n - 1 - t)) & 1;
      if (bit) target |= 1L << (n - 1 - order[t]);
    }
    out(target) = v(i);
  }
  return out;
}

}  // namespace

std::vector<SchurSector> schur_basis(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxTotalQubits)
    throw std::invalid_argument("schur_basis: unsupported qubit count");
  std::vector<SchurSector> sectors;
  Eigen::MatrixXd seed = Eigen::MatrixXd::Zero(2, 2);
  seed(1, 0) = 1.0;  // m = -1/2 is |down>
  seed(0, 1) = 1.0;  // m = +1/2 is |up>
  sectors.push_back({SpinLabel(1), seed});
  int rows = 2;
  for (int k = 1; k < n_qubits; ++k) {
    sectors = couple_qubit(sectors, rows);
    rows *= 2;
  }
  return sectors;
}

std::vector<SchurSector> schur_basis(int n_qubits,
                                     const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n_qubits)
    throw std::invalid_argument("schur_basis: order must list every qubit");
  auto sectors = schur_basis(n_qubits);
  for (auto& sec : sectors)
    for (int col = 0; col < sec.isometry.cols(); ++col)
      sec.isometry.col(col) =
          permute_qubits(sec.isometry.col(col), n_qubits, order);
  return sectors;
}

Eigen::VectorXd dicke_vector(int m_qubits, int two_m) {
  if (!magnetic_in_range(m_qubits, two_m))
    throw std::invalid_argument("dicke_vector: m out of range");
  const long dim = 1L << m_qubits;
  const int n_down = (m_qubits - two_m) / 2;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  double count = 0.0;
  for (long i = 0; i < dim; ++i)
    if (std::popcount(static_cast<unsigned long>(i)) == n_down) {
      v(i) = 1.0;
      count += 1.0;
    }
  return v / std::sqrt(count);
}

Eigen::MatrixXd dicke_matrix(int m_qubits) {
  Eigen::MatrixXd d(1L << m_qubits, m_qubits + 1);
  for (int col = 0; col <= m_qubits; ++col)
    d.col(col) = dicke_vector(m_qubits, -m_qubits + 2 * col);
  return d;
}

namespace {

DenseChoi build_universal_impl(int n_in, int m_out,
                               const std::vector<SchurSector>& input_sectors) {
  const long dim_out = 1L << m_out;
  const long dim_in = 1L << n_in;
  const long dim = dim_out * dim_in;
  const Eigen::MatrixXd dicke = dicke_matrix(m_out);

  // Columns of phi: |Phi^{l,b}_{J_l,T}> = sum_{m,n} <M/2 m, l n|J_l T>
  //   |M/2,m>_K (x) |l,n;b>_H, weighted by (2l+1)/(2J_l+1).
  long n_cols = 0;
  for (const auto& sec : input_sectors) n_cols += m_out - sec.j.two_j + 1;
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(dim, n_cols);
  Eigen::VectorXd coeff(n_cols);

  long col = 0;
  for (const auto& sec : input_sectors) {
    const int two_l = sec.j.two_j;
    const int two_J = m_out - two_l;
    const double c = double(two_l + 1) / double(two_J + 1);
    for (int two_T = -two_J; two_T <= two_J; two_T += 2, ++col) {
      coeff(col) = c;
      for (int two_n = -two_l; two_n <= two_l; two_n += 2) {
        const int two_m = two_T - two_n;
        if (std::abs(two_m) > m_out) continue;
        const double cg =
            spin::clebsch_gordan(m_out, two_m, two_l, two_n, two_J, two_T);
        if (cg == 0.0) continue;
        const auto d_col = dicke.col((two_m + m_out) / 2);
        const auto v_col = sec.isometry.col((two_n + two_l) / 2);
        for (long x = 0; x < dim_out; ++x) {
          const double dx = d_col(x);
          if (dx == 0.0) continue;
          phi.col(col).segment(x * dim_in, dim_in) += cg * dx * v_col;
        }
      }
    }
  }

  Eigen::MatrixXd s = phi * coeff.asDiagonal() * phi.transpose();

  // R = (1 (x) sy^N) S (1 (x) sy^N): input bits complement with the sign
  // (-1)^(popcount(a) + popcount(c)).
  DenseChoi choi;
  choi.n_in = n_in;
  choi.m_out = m_out;
  choi.family = Family::universal;
  choi.op = Eigen::MatrixXd::Zero(dim, dim);
  const long in_mask = dim_in - 1;
  for (long row = 0; row < dim; ++row) {
    const long x = row / dim_in, a = row & in_mask;
    const long row_s = x * dim_in + (~a & in_mask);
    const int sign_a = std::popcount(static_cast<unsigned long>(a)) % 2;
    for (long colr = 0; colr < dim; ++colr) {
      const long y = colr / dim_in, cbits = colr & in_mask;
      const long col_s = y * dim_in + (~cbits & in_mask);
      const int sign =
          (sign_a + std::popcount(static_cast<unsigned long>(cbits))) % 2;
      choi.op(row, colr) = sign ? -s(row_s, col_s) : s(row_s, col_s);
    }
  }
  return choi;
}

}  // namespace

DenseChoi build_choi_universal(int n_in, int m_out) {
  check_size(n_in, m_out);
  return build_universal_impl(n_in, m_out, schur_basis(n_in));
}

DenseChoi build_choi_universal(int n_in, int m_out,
                               const std::vector<int>& input_order) {
  check_size(n_in, m_out);
  return build_universal_impl(n_in, m_out, schur_basis(n_in, input_order));
}

DenseChoi build_choi_phase(int n_in, int m_out, int two_k) {
  check_size(n_in, m_out);
  if (std::abs(two_k) != (m_out - n_in) % 2)
    throw std::invalid_argument(
        "build_choi_phase: k must be 0 (M-N even) or +-1/2 (M-N odd)");
  const long dim_out = 1L << m_out;
  const long dim_in = 1L << n_in;
  const long dim = dim_out * dim_in;
  const Eigen::MatrixXd dicke = dicke_matrix(m_out);
  const auto sectors = schur_basis(n_in);

  DenseChoi choi;
  choi.n_in = n_in;
  choi.m_out = m_out;
  choi.family = Family::phase;
  choi.two_k = two_k;

  Eigen::MatrixXd chi =
      Eigen::MatrixXd::Zero(dim, static_cast<long>(sectors.size()));
  long col = 0;
  for (const auto& sec : sectors) {
    const int two_l = sec.j.two_j;
    for (int two_n = -two_l; two_n <= two_l; two_n += 2) {
      const int two_m = two_n + two_k;
      if (std::abs(two_m) > m_out) continue;
      const auto d_col = dicke.col((two_m + m_out) / 2);
      const auto v_col = sec.isometry.col((two_n + two_l) / 2);
      for (long x = 0; x < dim_out; ++x) {
        const double dx = d_col(x);
        if (dx == 0.0) continue;
        chi.col(col).segment(x * dim_in, dim_in) += dx * v_col;
      }
    }
    ++col;
  }
  choi.op = chi * chi.transpose();
  return choi;
}

Eigen::MatrixXd apply_channel(const DenseChoi& choi, double r,
                              product::Axis axis) {
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("apply_channel: r must lie in [0,1]");
  Eigen::Matrix2d rho1;
  if (axis == product::Axis::z)
    rho1 << 0.5 * (1.0 + r), 0.0, 0.0, 0.5 * (1.0 - r);
  else
    rho1 << 0.5, 0.5 * r, 0.5 * r, 0.5;
  const long dim_in = 1L << choi.n_in;
  Eigen::MatrixXd rho_in = Eigen::MatrixXd::Ones(1, 1);
  for (int q = 0; q < choi.n_in; ++q) {
    Eigen::MatrixXd next(rho_in.rows() * 2, rho_in.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        next.block(i * rho_in.rows(), k * rho_in.cols(), rho_in.rows(),
                   rho_in.cols()) = rho1(i, k) * rho_in;
    rho_in = std::move(next);
  }
  // Sigma_{xy} = sum_{ab} (rho^T)_{ab} R_{(x b),(y a)}; rho is real
  // symmetric so rho^T = rho.
  const long dim_out = 1L << choi.m_out;
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(dim_out, dim_out);
  for (long a = 0; a < dim_in; ++a)
    for (long b = 0; b < dim_in; ++b) {
      const double w = rho_in(a, b);
      if (w == 0.0) continue;
      for (long x = 0; x < dim_out; ++x) {
        const auto row = choi.op.row(x * dim_in + b);
        for (long y = 0; y < dim_out; ++y)
          sigma(x, y) += w * row(y * dim_in + a);
      }
    }
  return sigma;
}

Eigen::MatrixXd oracle_output(Family family, int n_in, int m_out, double r) {
  if (family == Family::universal)
    return apply_channel(build_choi_universal(n_in, m_out), r,
                         product::Axis::z);
  if ((m_out - n_in) % 2 == 0)
    return apply_channel(build_choi_phase(n_in, m_out, 0), r,
                         product::Axis::x);
  const auto plus = apply_channel(build_choi_phase(n_in, m_out, +1), r,
                                  product::Axis::x);
  const auto minus = apply_channel(build_choi_phase(n_in, m_out, -1), r,
                                   product::Axis::x);
  return 0.5 * (plus + minus);
}

Eigen::MatrixXd trace_to_first(const Eigen::MatrixXd& state, int n_qubits,
                               int keep) {
  if (keep < 0 || keep > n_qubits)
    throw std::invalid_argument("trace_to_first: bad subsystem split");
  const long dim_keep = 1L << keep;
  const long dim_rest = 1L << (n_qubits - keep);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_keep, dim_keep);
  for (long s = 0; s < dim_keep; ++s)
    for (long t = 0; t < dim_keep; ++t) {
      double acc = 0.0;
      for (long rest = 0; rest < dim_rest; ++rest)
        acc += state(s * dim_rest + rest, t * dim_rest + rest);
      out(s, t) = acc;
    }
  return out;
}

namespace {

using Cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

// G A G^dag for G = (x)_q u_q, applied one qubit at a time.
Eigen::MatrixXcd conjugate_by_product(const Eigen::MatrixXd& a, int n_qubits,
                                      const std::vector<Matrix2c>& us) {
  Eigen::MatrixXcd m = a.cast<Cplx>();
  const long dim = m.rows();
  for (int q = 0; q < n_qubits; ++q) {
    const Matrix2c& u = us[q];
    const long stride = 1L << (n_qubits - 1 - q);
    // rows: m <- U_q m
    for (long base = 0; base < dim; ++base) {
      if (base & stride) continue;
      const long i0 = base, i1 = base | stride;
      for (long c = 0; c < dim; ++c) {
        const Cplx v0 = m(i0, c), v1 = m(i1, c);
        m(i0, c) = u(0, 0) * v0 + u(0, 1) * v1;
        m(i1, c) = u(1, 0) * v0 + u(1, 1) * v1;
      }
    }
    // columns: m <- m U_q^dag
    const Matrix2c ud = u.adjoint();
    for (long base = 0; base < dim; ++base) {
      if (base & stride) continue;
      const long c0 = base, c1 = base | stride;
      for (long rr = 0; rr < dim; ++rr) {
        const Cplx v0 = m(rr, c0), v1 = m(rr, c1);
        m(rr, c0) = v0 * ud(0, 0) + v1 * ud(1, 0);
        m(rr, c1) = v0 * ud(0, 1) + v1 * ud(1, 1);
      }
    }
  }
  return m;
}

double covariance_norm(const DenseChoi& choi, const Matrix2c& g) {
  const int total = choi.m_out + choi.n_in;
  std::vector<Matrix2c> us(total);
  for (int q = 0; q < choi.m_out; ++q) us[q] = g;
  for (int q = choi.m_out; q < total; ++q) us[q] = g.conjugate();
  const Eigen::MatrixXcd rotated = conjugate_by_product(choi.op, total, us);
  const double scale = choi.op.norm();
  return (rotated - choi.op.cast<Cplx>()).norm() / scale;
}

Matrix2c su2_from(double theta, double nx, double ny, double nz) {
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  nx /= norm;
  ny /= norm;
  nz /= norm;
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  Matrix2c u;
  u << Cplx(c, s * nz), Cplx(s * ny, s * nx), Cplx(-s * ny, s * nx),
      Cplx(c, -s * nz);
  return u;
}

// Swaps qubits q1, q2 in the row/column indices of the given block range.
double permutation_norm(const DenseChoi& choi, int q1, int q2) {
  const int total = choi.m_out + choi.n_in;
  const long dim = choi.op.rows();
  const long b1 = 1L << (total - 1 - q1);
  const long b2 = 1L << (total - 1 - q2);
  const auto swapped = [&](long i) {
    const long v1 = (i & b1) ? 1 : 0, v2 = (i & b2) ? 1 : 0;
    if (v1 == v2) return i;
    return i ^ (b1 | b2);
  };
  double max_diff = 0.0;
  const double scale = choi.op.cwiseAbs().maxCoeff();
  for (long row = 0; row < dim; ++row)
    for (long colr = 0; colr < dim; ++colr) {
      const double diff =
          std::abs(choi.op(row, colr) - choi.op(swapped(row), swapped(colr)));
      if (diff > max_diff) max_diff = diff;
    }
  return max_diff / scale;
}

}  // namespace

CovarianceReport check_covariance(const DenseChoi& choi) {
  CovarianceReport rep;
  if (choi.family == Family::universal) {
    std::mt19937 rng(0x5eedu);  // fixed seed: the sample is part of the spec
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int s = 0; s < 12; ++s) {
      const double theta = 2.0 * std::numbers::pi * uni(rng);
      const double z = 2.0 * uni(rng) - 1.0;
      const double phi = 2.0 * std::numbers::pi * uni(rng);
      const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Matrix2c g =
          su2_from(theta, rxy * std::cos(phi), rxy * std::sin(phi), z);
      rep.max_commutator = std::max(rep.max_commutator,
                                    covariance_norm(choi, g));
    }
  } else {
    for (int s = 0; s < 12; ++s) {
      const double phi = 2.0 * std::numbers::pi * (s + 0.5) / 12.0;
      Matrix2c g = Matrix2c::Zero();
      g(0, 0) = std::polar(1.0, 0.5 * phi);
      g(1, 1) = std::polar(1.0, -0.5 * phi);
      rep.max_commutator = std::max(rep.max_commutator,
                                    covariance_norm(choi, g));
    }
  }
  for (int q1 = 0; q1 < choi.m_out; ++q1)
    for (int q2 = q1 + 1; q2 < choi.m_out; ++q2)
      rep.max_permutation =
          std::max(rep.max_permutation, permutation_norm(choi, q1, q2));
  for (int q1 = choi.m_out; q1 < choi.m_out + choi.n_in; ++q1)
    for (int q2 = q1 + 1; q2 < choi.m_out + choi.n_in; ++q2)
      rep.max_permutation =
          std::max(rep.max_permutation, permutation_norm(choi, q1, q2));
  return rep;
}

double non_equatorial_violation(const DenseChoi& choi) {
  return covariance_norm(choi, su2_from(std::numbers::pi / 3.0, 0.0, 1.0, 0.0));
}

ChoiInvariants check_invariants(const DenseChoi& choi) {
  ChoiInvariants inv;
  const long dim_in = 1L << choi.n_in;
  const long dim_out = 1L << choi.m_out;
  Eigen::MatrixXd tr = Eigen::MatrixXd::Zero(dim_in, dim_in);
  for (long a = 0; a < dim_in; ++a)
    for (long c = 0; c < dim_in; ++c) {
      double acc = 0.0;
      for (long x = 0; x < dim_out; ++x)
        acc += choi.op(x * dim_in + a, x * dim_in + c);
      tr(a, c) = acc;
    }
  inv.tp_error =
      (tr - Eigen::MatrixXd::Identity(dim_in, dim_in)).cwiseAbs().maxCoeff();

  const double shift = 1e-9 * choi.op.diagonal().cwiseAbs().maxCoeff();
  Eigen::LLT<Eigen::MatrixXd> llt(
      choi.op + shift * Eigen::MatrixXd::Identity(choi.op.rows(),
                                                  choi.op.cols()));
  inv.psd_shifted = (llt.info() == Eigen::Success);

  if (choi.op.rows() <= (1L << 9)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        choi.op, Eigen::EigenvaluesOnly);
    inv.min_eigenvalue = solver.eigenvalues().minCoeff();
  } else {
    inv.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }
  return inv;
}

double weight_outside_symmetric(const Eigen::MatrixXd& state, int m_qubits) {
  const Eigen::MatrixXd dicke = dicke_matrix(m_qubits);
  const double inside = (dicke.transpose() * state * dicke).trace();
  return state.trace() - inside;
}

}  // namespace superb::oracle
