#include "superb/phase_covariant.hpp"

#include <cmath>
#include <stdexcept>

#include "superb/spin_algebra.hpp"

namespace superb::phase {

std::vector<PhaseExtremalSpec> optimal_specs(int n_in, int m_out) {
  if (n_in < 1) throw std::invalid_argument("optimal_specs: need N >= 1");
  if (m_out < n_in)
    throw std::invalid_argument("optimal_specs: M < N is not covered");
  std::vector<SpinLabel> ls;
  for (int two_l = lowest_two_j(n_in); two_l <= n_in; two_l += 2)
    ls.emplace_back(two_l);
  std::vector<PhaseExtremalSpec> specs;
  if ((m_out - n_in) % 2 == 0) {
    specs.push_back({n_in, m_out, 0, ls});
  } else {
    specs.push_back({n_in, m_out, +1, ls});
    specs.push_back({n_in, m_out, -1, ls});
  }
  return specs;
}

namespace {

void check_args(int n_in, int m_out, double r) {
  if (n_in < 1 || m_out < n_in)
    throw std::invalid_argument("phase: need M >= N >= 1");
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("phase: r must lie in [0,1]");
}

// Offset of the k index for a given parity; both odd branches give the
// same scaling factor, evaluated here with k = +1/2.
int two_k_for(int n_in, int m_out) { return (m_out - n_in) % 2 == 0 ? 0 : 1; }

}  // namespace

ScalingEvaluator::ScalingEvaluator(int n_in, int m_out)
    : ScalingEvaluator(n_in, m_out, two_k_for(n_in, m_out)) {}

ScalingEvaluator::ScalingEvaluator(int n_in, int m_out, int two_k)
    : n_in_(n_in), m_out_(m_out) {
  check_args(n_in, m_out, 0.0);
  if (std::abs(two_k) != (m_out - n_in) % 2)
    throw std::invalid_argument(
        "ScalingEvaluator: k must be 0 (M-N even) or +-1/2 (M-N odd)");
  const SpinLabel jtop(m_out);
  for (int two_l = lowest_two_j(n_in); two_l <= n_in; two_l += 2) {
    if (two_l == 0) continue;  // no superdiagonal
    const SpinLabel l(two_l);
    const auto& w = spin::wigner_half_pi_cached(l).entries;
    const int dim = two_l + 1;
    BlockData bd;
    bd.two_l = two_l;
    bd.multiplicity = spin::multiplicity(n_in, l);
    bd.folded = Eigen::VectorXd::Zero(dim);
    bd.zero_limit = 0.0;
    for (int i = 0; i + 1 < dim; ++i) {
      const int two_n = -two_l + 2 * i;
      const double h = spin::jx_offdiag(jtop, two_n + two_k);
      for (int c = 0; c < dim; ++c)
        bd.folded(c) += w(i, c) * w(i + 1, c) * h;
      bd.zero_limit += spin::jx_offdiag(l, two_n) * h;
    }
    blocks_.push_back(std::move(bd));
  }
}

double ScalingEvaluator::operator()(double r) const {
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("phase: r must lie in [0,1]");
  double acc = 0.0;
  if (r == 0.0) {
    // [wexp]_{n,n+1} ~ 2^{1-N} [J_x^{(l)}]_{n,n+1} r near r = 0.
    for (const auto& b : blocks_)
      acc += b.multiplicity * std::ldexp(b.zero_limit, 1 - n_in_);
  } else {
    for (const auto& b : blocks_) {
      const Eigen::VectorXd g = spin::block_weights_vector(n_in_, b.two_l, r);
      acc += b.multiplicity * b.folded.dot(g);
    }
    acc /= r;
  }
  return 4.0 / m_out_ * acc;
}

double scaling_factor(int n_in, int m_out, double r) {
  check_args(n_in, m_out, r);
  return ScalingEvaluator(n_in, m_out)(r);
}

double scaling_factor(int n_in, int m_out, double r, int two_k) {
  check_args(n_in, m_out, r);
  return ScalingEvaluator(n_in, m_out, two_k)(r);
}

PhaseOutput output_state(int n_in, int m_out, double r, Branch branch) {
  check_args(n_in, m_out, r);
  const bool odd = (m_out - n_in) % 2 != 0;
  if (!odd && branch != Branch::mixed)
    throw std::invalid_argument(
        "output_state: branch selection only applies when M - N is odd");
  PhaseOutput out;
  out.n_in = n_in;
  out.m_out = m_out;
  out.r = r;
  out.branch = branch;
  out.matrix = Eigen::MatrixXd::Zero(m_out + 1, m_out + 1);

  std::vector<std::pair<int, double>> shifts;  // (2k, mixing weight)
  if (!odd)
    shifts = {{0, 1.0}};
  else if (branch == Branch::plus)
    shifts = {{+1, 1.0}};
  else if (branch == Branch::minus)
    shifts = {{-1, 1.0}};
  else
    shifts = {{+1, 0.5}, {-1, 0.5}};

  for (int two_l = lowest_two_j(n_in); two_l <= n_in; two_l += 2) {
    const SpinLabel l(two_l);
    const double d = spin::multiplicity(n_in, l);
    const Eigen::MatrixXd e = spin::jx_weighted_exponential(l, r, n_in);
    for (const auto& [two_k, wt] : shifts) {
      for (int i = 0; i <= two_l; ++i) {
        const int row = (-two_l + 2 * i + two_k + m_out) / 2;
        for (int i2 = 0; i2 <= two_l; ++i2) {
          const int col = (-two_l + 2 * i2 + two_k + m_out) / 2;
          out.matrix(row, col) += wt * d * e(i, i2);
        }
      }
    }
  }
  return out;
}

double z_bias(const PhaseExtremalSpec& spec) {
  double acc = 0.0;
  for (const auto& l : spec.ls) {
    const double d = spin::multiplicity(spec.n_in, l);
    acc += (l.two_j + 1) * std::ldexp(d, -spec.n_in) * (0.5 * spec.two_k);
  }
  return 2.0 * acc / spec.m_out;
}

}  // namespace superb::phase
