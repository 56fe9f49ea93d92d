#pragma once

#include <Eigen/Dense>
#include <vector>

#include "superb/product_state.hpp"
#include "superb/spin.hpp"
#include "superb/thresholds.hpp"

namespace superb::oracle {

using thresholds::Family;

/// Hard cap on the dense verification space: 2^(M+N) <= 2^14.
inline constexpr int kMaxTotalQubits = 14;

/// One irrep sector of the Schur (total-spin) basis of n qubits: an
/// isometry whose columns are the physical vectors |j, m; path> for
/// m = -j..j ascending. The per-j sectors of one basis are mutually
/// orthogonal and count the multiplicity d_j.
struct SchurSector {
  SpinLabel j;
  Eigen::MatrixXd isometry;  // 2^n rows, 2j+1 columns
};

/// Iterated Clebsch-Gordan coupling, one qubit at a time. `order` selects
/// which physical qubit is absorbed at each step (defaults to 0,1,...,n-1);
/// any order spans the same sectors.
std::vector<SchurSector> schur_basis(int n_qubits);
std::vector<SchurSector> schur_basis(int n_qubits,
                                     const std::vector<int>& order);

/// Dicke state |M/2, m> of m_qubits qubits, two_m doubled.
Eigen::VectorXd dicke_vector(int m_qubits, int two_m);
/// All Dicke states as columns, m ascending: 2^M x (M+1).
Eigen::MatrixXd dicke_matrix(int m_qubits);

/// Dense Choi operator R on the 2^(M+N)-dimensional space K (x) H, with
/// the first M qubits the output. Real symmetric in the computational
/// basis for both families.
struct DenseChoi {
  int n_in = 0;
  int m_out = 0;
  Family family = Family::universal;
  int two_k = 0;  // phase branch offset; 0 for universal / even M - N
  Eigen::MatrixXd op;
};

/// Optimal universal map, assembled as S = (+)_l (2l+1)/((2J_l+1) d_{j_l})
/// P^{J_l}_{j_l,l} on explicit Schur isometries and rotated back through
/// R = (1 (x) sy^N) S (1 (x) sy^N).
DenseChoi build_choi_universal(int n_in, int m_out);
DenseChoi build_choi_universal(int n_in, int m_out,
                               const std::vector<int>& input_order);

/// Optimal phase-covariant branch with uniform offset two_k (0 when M - N
/// is even, +-1 when odd).
DenseChoi build_choi_phase(int n_in, int m_out, int two_k);

/// E(rho^{xN}) = Tr_H[(1 (x) (rho^T)^{xN}) R] for a Bloch-z or Bloch-x
/// input of length r; returns the dense M-qubit output.
Eigen::MatrixXd apply_channel(const DenseChoi& choi, double r,
                              product::Axis axis);

/// Dense output of the optimal channel on its natural input axis
/// (z for universal, x for phase); odd phase maps are the 50/50 branch
/// mixture.
Eigen::MatrixXd oracle_output(Family family, int n_in, int m_out, double r);

/// Partial trace keeping the first `keep` qubits of an n-qubit state.
Eigen::MatrixXd trace_to_first(const Eigen::MatrixXd& state, int n_qubits,
                               int keep);

struct CovarianceReport {
  double max_commutator = 0.0;    // relative Frobenius over the group sample
  double max_permutation = 0.0;   // over all output/input transpositions
};

/// Covariance under 12 sampled group elements (seeded Haar-like SU(2)
/// sample for universal, a phase grid for phase) plus permutation
/// invariance under every transposition.
CovarianceReport check_covariance(const DenseChoi& choi);

/// Commutator norm with a single non-equatorial rotation (pi/3 about y);
/// phase-covariant maps are expected to violate this.
double non_equatorial_violation(const DenseChoi& choi);

struct ChoiInvariants {
  double tp_error = 0.0;         // max |Tr_K R - 1|
  bool psd_shifted = false;      // LLT of R + 1e-9 s 1 succeeded
  double min_eigenvalue = 0.0;   // exact; only for dim <= 2^9 (else NaN)
};

ChoiInvariants check_invariants(const DenseChoi& choi);

/// Weight of an M-qubit state outside the symmetric subspace.
double weight_outside_symmetric(const Eigen::MatrixXd& state, int m_qubits);

}  // namespace superb::oracle
