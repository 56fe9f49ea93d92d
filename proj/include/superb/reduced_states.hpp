#pragma once

#include <Eigen/Dense>

#include "superb/phase_covariant.hpp"
#include "superb/product_state.hpp"
#include "superb/spin.hpp"
#include "superb/universal.hpp"

namespace superb::reduced {

/// One output copy. Basis (|up>, |down>) with up = m = +1/2.
struct SingleQubitState {
  Eigen::Matrix2cd rho;
  Eigen::Vector3d bloch() const;
};

/// Two output copies: the computational-basis 4x4 matrix together with its
/// triplet-block view in the basis (|1,-1>, |1,0>, |1,1>). States reduced
/// from the maximal-spin block have no singlet component.
struct TwoQubitState {
  Eigen::Matrix4cd rho;
  Eigen::Matrix3cd triplet;
};

/// Partial trace over M-1 sites of an operator on the sector
/// H_j (x) C^{d_j}, given in the J_z basis of H_j (ascending m). Entries
/// with |m - m'| = 1 contribute sigma_x/sigma_y parts; |m - m'| >= 2
/// contribute nothing.
SingleQubitState single_site(const Eigen::MatrixXcd& block, SpinLabel j,
                             double multiplicity, int m_qubits);

SingleQubitState single_site(const universal::UniversalOutput& out);
SingleQubitState single_site(const phase::PhaseOutput& out);
/// Marginal of rho^{xN} itself; returns the input qubit back.
SingleQubitState single_site(const product::BlockWeights& weights);

/// Partial trace over M-2 sites of an operator on the maximal-spin block
/// H_{M/2}, via the j -> (j-1) (x) 1 Clebsch-Gordan split.
TwoQubitState two_site(const Eigen::MatrixXcd& top_block, int m_qubits);

TwoQubitState two_site(const universal::UniversalOutput& out);
TwoQubitState two_site(const phase::PhaseOutput& out);

/// Embedding of a triplet-block operator into the two-qubit space.
Eigen::Matrix4cd embed_triplet(const Eigen::Matrix3cd& triplet);

}  // namespace superb::reduced
