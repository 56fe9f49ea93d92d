#pragma once

#include <Eigen/Dense>
#include <vector>

#include "superb/spin.hpp"

namespace superb::product {

enum class Axis { z, x };

/// A qubit state (1 + r sigma)/2 with Bloch vector of length r along the
/// tagged axis.
struct BlochQubit {
  double r = 0.0;
  Axis axis = Axis::z;

  BlochQubit(double r_, Axis axis_) : r(r_), axis(axis_) {
    if (!(r >= 0.0 && r <= 1.0))
      throw std::invalid_argument("BlochQubit: r must lie in [0,1]");
  }
};

/// Block decomposition of rho^{xN}: for each spin-l sector the weight of
/// |l,m><l,m| (eigenbasis of J along the tagged axis) together with the
/// multiplicity d_l. The weights are stored in the nonsingular factored
/// form, so the r -> 1 limit is exact.
struct BlockWeights {
  struct Block {
    SpinLabel l;
    double multiplicity = 0.0;
    Eigen::VectorXd w;  // index i <-> m = -l + i, ascending
  };

  int n_copies = 0;
  Axis axis = Axis::z;
  std::vector<Block> blocks;  // ascending l, from l0 to N/2

  /// Sum over l of d_l * sum_m w_{l,m}; equals 1 for a valid decomposition.
  double total() const;

  const Block& block(SpinLabel l) const;
};

BlockWeights decompose(int n_copies, const BlochQubit& q);

}  // namespace superb::product
