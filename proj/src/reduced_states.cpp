#include "superb/reduced_states.hpp"

#include <cmath>
#include <stdexcept>

#include "superb/spin_algebra.hpp"

namespace superb::reduced {

Eigen::Vector3d SingleQubitState::bloch() const {
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

SingleQubitState single_site(const Eigen::MatrixXcd& block, SpinLabel j,
                             double multiplicity, int m_qubits) {
  if (block.rows() != block.cols())
    throw std::invalid_argument("single_site: block must be square");
  if (block.rows() != j.dim())
    throw std::invalid_argument("single_site: block dimension must be 2j+1");
  if (std::abs(block.trace()) < 1e-14)
    throw std::invalid_argument("single_site: trace-zero input");
  if (m_qubits < 1 || j.two_j > m_qubits)
    throw std::invalid_argument("single_site: need 2j <= M");

  // Tr_{M-1}[|j,m><j,m| (x) 1_d] = d (1/2 + (m/M) sigma_z)
  // Tr_{M-1}[|j,m><j,m+1| (x) 1_d] = (d/M) sqrt((j-m)(j+m+1)) |down><up|
  const int dim = j.dim();
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < dim; ++i) {
    const double m = -j.value() + i;
    const auto x = block(i, i) * multiplicity;
    rho(0, 0) += x * (0.5 + m / m_qubits);
    rho(1, 1) += x * (0.5 - m / m_qubits);
    if (i + 1 < dim) {
      const int two_m = -j.two_j + 2 * i;
      const double c =
          2.0 * spin::jx_offdiag(j, two_m) * multiplicity / m_qubits;
      rho(1, 0) += block(i, i + 1) * c;  // |down><up|
      rho(0, 1) += block(i + 1, i) * c;
    }
  }
  return SingleQubitState{rho};
}

SingleQubitState single_site(const universal::UniversalOutput& out) {
  return single_site(out.sigma.cast<std::complex<double>>().asDiagonal()
                         .toDenseMatrix(),
                     SpinLabel(out.m_out), 1.0, out.m_out);
}

SingleQubitState single_site(const phase::PhaseOutput& out) {
  return single_site(out.matrix.cast<std::complex<double>>(),
                     SpinLabel(out.m_out), 1.0, out.m_out);
}

SingleQubitState single_site(const product::BlockWeights& weights) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (const auto& b : weights.blocks) {
    if (b.w.sum() == 0.0) continue;  // block absent (e.g. pure input)
    const auto s = single_site(
        b.w.cast<std::complex<double>>().asDiagonal().toDenseMatrix(), b.l,
        b.multiplicity, weights.n_copies);
    rho += s.rho;
  }
  return SingleQubitState{rho};
}

namespace {

// Coefficients of the split |j,m> -> H_{j-1} (x) H_1,
// c_mu(m) = <j-1, m-mu; 1, mu | j, m>, closed form.
double split_coeff(int two_j, int two_m, int mu) {
  const double j = 0.5 * two_j;
  const double m = 0.5 * two_m;
  const double den = 2.0 * j * (2.0 * j - 1.0);
  switch (mu) {
    case +1: return std::sqrt((j + m) * (j + m - 1.0) / den);
    case 0: return std::sqrt(2.0 * (j * j - m * m) / den);
    case -1: return std::sqrt((j - m) * (j - m - 1.0) / den);
    default: throw std::logic_error("split_coeff: mu out of range");
  }
}

}  // namespace

TwoQubitState two_site(const Eigen::MatrixXcd& top_block, int m_qubits) {
  if (m_qubits < 2) throw std::invalid_argument("two_site: need M >= 2");
  if (top_block.rows() != m_qubits + 1 || top_block.cols() != m_qubits + 1)
    throw std::invalid_argument("two_site: block must be (M+1) x (M+1)");

  const int two_j = m_qubits;
  Eigen::Matrix3cd triplet = Eigen::Matrix3cd::Zero();
  for (int i = 0; i <= two_j; ++i) {
    const int two_m = -two_j + 2 * i;
    for (int mu = -1; mu <= 1; ++mu) {
      const double cm = split_coeff(two_j, two_m, mu);
      if (cm == 0.0) continue;
      for (int mu2 = -1; mu2 <= 1; ++mu2) {
        // matching magnetic number in H_{j-1}: m - mu = m' - mu'
        const int two_m2 = two_m - 2 * mu + 2 * mu2;
        if (two_m2 < -two_j || two_m2 > two_j) continue;
        const double cm2 = split_coeff(two_j, two_m2, mu2);
        if (cm2 == 0.0) continue;
        triplet(mu + 1, mu2 + 1) +=
            top_block(i, (two_m2 + two_j) / 2) * cm * cm2;
      }
    }
  }
  return TwoQubitState{embed_triplet(triplet), triplet};
}

Eigen::Matrix4cd embed_triplet(const Eigen::Matrix3cd& triplet) {
  // |1,1> = |uu>, |1,0> = (|ud> + |du>)/sqrt(2), |1,-1> = |dd>
  Eigen::Matrix<std::complex<double>, 4, 3> v =
      Eigen::Matrix<std::complex<double>, 4, 3>::Zero();
  v(3, 0) = 1.0;
  v(1, 1) = v(2, 1) = 1.0 / std::sqrt(2.0);
  v(0, 2) = 1.0;
  return v * triplet * v.adjoint();
}

TwoQubitState two_site(const universal::UniversalOutput& out) {
  return two_site(out.sigma.cast<std::complex<double>>().asDiagonal()
                      .toDenseMatrix(),
                  out.m_out);
}

TwoQubitState two_site(const phase::PhaseOutput& out) {
  return two_site(out.matrix.cast<std::complex<double>>(), out.m_out);
}

}  // namespace superb::reduced
