#pragma once

#include <Eigen/Dense>
#include <array>

#include "superb/reduced_states.hpp"

namespace superb::ent {

/// Coordinates of a swap-symmetric, J_z-diagonal two-qubit state
/// rho = alpha 1 + beta J_z + gamma J_z^2 on the triplet block, with
/// gamma = (1 - 3 alpha)/2 fixed by the unit trace. Physical states fill
/// the triangle alpha >= 0, alpha <= 1 - 2|beta|.
struct TriangleCoords {
  double beta = 0.0;
  double alpha = 0.0;

  double gamma() const { return 0.5 * (1.0 - 3.0 * alpha); }
  bool physical(double tol = 1e-12) const {
    return alpha >= -tol && alpha <= 1.0 - 2.0 * std::abs(beta) + tol;
  }
};

struct ConcurrenceResult {
  double concurrence = 0.0;                 // C in [0,1]
  std::array<double, 4> lambdas{};          // descending eigenvalues of Psi
  double entanglement_of_formation = 0.0;   // E in [0,1]
};

/// Wootters concurrence of a two-qubit density matrix: the lambdas are the
/// eigenvalues of Psi = sqrt(sqrt(rho) rho~ sqrt(rho)) with
/// rho~ = (sy (x) sy) rho* (sy (x) sy), and C = max(0, l1 - l2 - l3 - l4).
ConcurrenceResult concurrence(const Eigen::Matrix4cd& rho2);

/// Closed-form concurrence on the triangle:
/// 0 below the parabola alpha = (1 - 4 beta^2)/2, otherwise
/// alpha - sqrt(1 - 2 alpha + alpha^2 - 4 beta^2).
double concurrence_triangle(const TriangleCoords& t);

/// Entanglement of formation: binary entropy (base 2) of
/// (1 + sqrt(1 - C^2))/2.
double entanglement_of_formation(double c);

/// Fit (alpha, beta, gamma) against {1, J_z, J_z^2} on the triplet block.
/// Inputs must commute with J_z^(1), be swap-symmetric and have no singlet
/// component; anything else is rejected.
TriangleCoords triangle_coords(const reduced::TwoQubitState& rho2,
                               double tol = 1e-10);

/// The 4x4 density matrix with the given triangle coordinates.
Eigen::Matrix4cd reconstruct(const TriangleCoords& t);

}  // namespace superb::ent
