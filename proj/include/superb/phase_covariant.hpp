#pragma once

#include <Eigen/Dense>
#include <vector>

#include "superb/spin.hpp"

namespace superb::phase {

/// Extremal phase-covariant map: j_l = M/2 for every l together with a
/// uniform offset k (doubled). k = 0 when M - N is even; k = +-1/2 when
/// M - N is odd, in which case there are two equivalent branches.
struct PhaseExtremalSpec {
  int n_in = 0;
  int m_out = 0;
  int two_k = 0;
  std::vector<SpinLabel> ls;  // input blocks, ascending

  SpinLabel j() const { return SpinLabel(m_out); }
};

/// The optimal spec(s): one entry for M - N even, the k = +1/2 and
/// k = -1/2 pair for M - N odd.
std::vector<PhaseExtremalSpec> optimal_specs(int n_in, int m_out);

/// Optimal scaling factor p^{N,M}(r); identical for both odd branches.
/// r = 0 returns the analytic limit.
double scaling_factor(int n_in, int m_out, double r);
/// Branch-resolved form, two_k in {0, +1, -1} matching the parity of M - N.
double scaling_factor(int n_in, int m_out, double r, int two_k);

/// Precomputed evaluator for scanning p^{N,M}(r) over many r. The Wigner
/// rotations and the J_x matrix elements are folded into one coefficient
/// per J_x eigenvalue, so each evaluation costs O(N) exponentials.
class ScalingEvaluator {
 public:
  ScalingEvaluator(int n_in, int m_out);
  ScalingEvaluator(int n_in, int m_out, int two_k);
  double operator()(double r) const;

 private:
  struct BlockData {
    int two_l;
    double multiplicity;
    Eigen::VectorXd folded;   // sum_n W_{n,c} W_{n+1,c} [J_x^{(M/2)}]_{n+k,n+k+1}
    double zero_limit;        // contribution slope at r = 0
  };
  int n_in_;
  int m_out_;
  std::vector<BlockData> blocks_;
};

enum class Branch { mixed, plus, minus };

/// Global output state on H_{M/2} in the J_z basis, as a full
/// (M+1) x (M+1) real symmetric matrix. For M - N odd the default is the
/// 50/50 mixture of the k = +-1/2 branches; a single branch can be
/// requested instead.
struct PhaseOutput {
  int n_in = 0;
  int m_out = 0;
  double r = 0.0;
  Branch branch = Branch::mixed;
  Eigen::MatrixXd matrix;  // index i <-> m = -M/2 + i, ascending
};

PhaseOutput output_state(int n_in, int m_out, double r,
                         Branch branch = Branch::mixed);

/// z-component of the single-site output Bloch vector induced by the
/// offset k of an unmixed branch: (2/M) sum_l (2l+1) (d_l / 2^N) k_l.
/// Zero when k = 0; the +-1/2 mixture cancels it.
double z_bias(const PhaseExtremalSpec& spec);

}  // namespace superb::phase
