#pragma once

#include <Eigen/Dense>

#include "superb/spin.hpp"

namespace superb::spin {

/// Multiplicity d_j of the spin-j irrep in the Wedderburn decomposition of
/// m_qubits coupled qubits,
///     d_j = (2j+1)/(m/2+j+1) * C(m, m/2-j),
/// evaluated in log-gamma space so it stays finite up to a few hundred
/// qubits. The result is snapped to the exact integer when representable.
double multiplicity(int m_qubits, SpinLabel j);

/// J_z in the spin-l block: diag(-l..l). Rows/columns are indexed by the
/// magnetic number in ascending order, index i <-> m = -l + i.
Eigen::MatrixXd jz_matrix(SpinLabel l);

/// J_x in the spin-l block: real symmetric tridiagonal with
/// [J_x]_{m,m+1} = sqrt(l(l+1) - m(m+1)) / 2.
Eigen::MatrixXd jx_matrix(SpinLabel l);

/// Off-diagonal element [J_x]_{m,m+1} for doubled magnetic number two_m.
double jx_offdiag(SpinLabel j, int two_m);

/// Clebsch-Gordan coefficient <j1 m1, j2 m2 | J M> in the Condon-Shortley
/// convention (Racah's formula, log-factorial evaluation). All arguments
/// are doubled. Returns 0 when a selection rule (triangle, M = m1+m2,
/// integer perimeter) fails; throws on arguments that are not valid
/// (j,m) pairs.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M);

/// Rotation that takes J_z eigenvectors to J_x eigenvectors,
/// (W_l)_{a,b} = <l,a|l^x,b>, i.e. the Wigner d-matrix at beta = pi/2.
/// Columns are eigenvectors of jx_matrix(l); the sign of each column is
/// fixed by <l,-l|l^x,b> > 0, which reproduces the Condon-Shortley
/// d^{(l)}(pi/2) and in particular <l,l|l^x,l> > 0.
struct WignerHalfPi {
  SpinLabel l;
  Eigen::MatrixXd entries;  // (2l+1) x (2l+1), row a, column b, ascending
};

WignerHalfPi wigner_half_pi(SpinLabel l);

/// Shared read-mostly cache of W_l keyed by 2l.
const WignerHalfPi& wigner_half_pi_cached(SpinLabel l);

/// Block weight of rho^{xN} in the nonsingular factored form,
///     (r+ r-)^{n/2 - l} r+^{l+m} r-^{l-m},
/// with r+- = (1 +- r)/2. Finite for the whole range r in [0,1].
double block_weight(int n_copies, int two_l, int two_m, double r);

/// All 2l+1 block weights, m ascending. Evaluates the top weight once and
/// walks down by the exact ratio r-/r+, which keeps dense r scans cheap.
Eigen::VectorXd block_weights_vector(int n_copies, int two_l, double r);

/// The combination (r+ r-)^{n/2} exp(J_x^{(l)} log(r+/r-)) appearing in the
/// phase-covariant output, evaluated in the J_x eigenbasis as
/// W diag(block_weight) W^T so that r = 1 is exact.
Eigen::MatrixXd jx_weighted_exponential(SpinLabel l, double r, int n_copies);

/// First superdiagonal of jx_weighted_exponential, entries
/// [..]_{m,m+1} for m = -l..l-1. Cheaper than the full matrix.
Eigen::VectorXd jx_weighted_exponential_superdiag(SpinLabel l, double r,
                                                  int n_copies);

}  // namespace superb::spin
