#pragma once

#include <Eigen/Dense>
#include <vector>

#include "superb/spin.hpp"

namespace superb::universal {

/// Extremal universally covariant map: per input block l the choice of
/// output block j_l and total spin J_l, with the delta-supported
/// coefficient s^{J_l}_{j_l,l} = (2l+1)/((2J_l+1) d_{j_l}).
struct UniversalExtremalSpec {
  struct Choice {
    SpinLabel l;
    SpinLabel j;  // j_l
    SpinLabel J;  // J_l
  };
  int n_in = 0;
  int m_out = 0;
  std::vector<Choice> choices;  // ascending l
};

/// beta(J, j, l) = (J(J+1) - j(j+1) - l(l+1)) / (2 l (l+1)).
/// l = 0 is rejected: such blocks carry no J_z and never enter the
/// scaling-factor sum.
double beta(SpinLabel J, SpinLabel j, SpinLabel l);

/// The optimum j_l = M/2, J_l = M/2 - l for every l.
UniversalExtremalSpec optimal_spec(int n_in, int m_out);

/// Optimal scaling factor p^{N,M}(r). r = 0 returns the analytic limit.
double scaling_factor(int n_in, int m_out, double r);

/// The M -> infinity scaling factor p^{N,inf}(r).
double scaling_factor_infinite(int n_in, double r);

/// Diagonal weights of the global output state on the maximal-spin block
/// H_{M/2}, sigma_m for m = -M/2..M/2.
struct UniversalOutput {
  int n_in = 0;
  int m_out = 0;
  double r = 0.0;
  bool purification = false;  // flags the M = N regime
  Eigen::VectorXd sigma;      // index i <-> m = -M/2 + i, ascending
};

UniversalOutput output_state(int n_in, int m_out, double r);

}  // namespace superb::universal
