#include "superb/universal.hpp"

#include <cmath>
#include <stdexcept>

#include "superb/product_state.hpp"
#include "superb/spin_algebra.hpp"

namespace superb::universal {

double beta(SpinLabel J, SpinLabel j, SpinLabel l) {
  if (l.two_j == 0)
    throw std::invalid_argument("beta: l = 0 blocks never contribute");
  if (J.two_j < std::abs(j.two_j - l.two_j) || J.two_j > j.two_j + l.two_j)
    throw std::invalid_argument("beta: (J, j, l) violates the triangle rule");
  const double Jv = J.value(), jv = j.value(), lv = l.value();
  return (Jv * (Jv + 1.0) - jv * (jv + 1.0) - lv * (lv + 1.0)) /
         (2.0 * lv * (lv + 1.0));
}

UniversalExtremalSpec optimal_spec(int n_in, int m_out) {
  if (n_in < 1) throw std::invalid_argument("optimal_spec: need N >= 1");
  if (m_out < n_in)
    throw std::invalid_argument("optimal_spec: M < N is not covered");
  UniversalExtremalSpec spec;
  spec.n_in = n_in;
  spec.m_out = m_out;
  for (int two_l = lowest_two_j(n_in); two_l <= n_in; two_l += 2)
    spec.choices.push_back({SpinLabel(two_l), SpinLabel(m_out),
                            SpinLabel(m_out - two_l)});
  return spec;
}

namespace {

// sum_n n w_{l,n} over the block, with w the nonsingular weights of
// rho^{xN} at Bloch length r. Nonnegative since r+ >= r-.
double first_moment(int n_copies, int two_l, double r) {
  const Eigen::VectorXd w = spin::block_weights_vector(n_copies, two_l, r);
  double acc = 0.0;
  for (int i = 0; i <= two_l; ++i) acc += (-0.5 * two_l + i) * w(i);
  return acc;
}

// r -> 0 limit of (1/r) sum_n n w_{l,n}: each weight has slope 2n/2^N.
double first_moment_slope_at_zero(int n_copies, int two_l) {
  const double lv = 0.5 * two_l;
  return std::ldexp(2.0 * lv * (lv + 1.0) * (2.0 * lv + 1.0) / 3.0, -n_copies);
}

double scaling_factor_impl(int n_in, double m_prefactor, double r) {
  double acc = 0.0;
  for (int two_l = lowest_two_j(n_in); two_l <= n_in; two_l += 2) {
    if (two_l == 0) continue;  // zero first moment
    const double d = spin::multiplicity(n_in, SpinLabel(two_l));
    const double lv = 0.5 * two_l;
    const double s = (r == 0.0) ? first_moment_slope_at_zero(n_in, two_l)
                                : first_moment(n_in, two_l, r) / r;
    acc += d / (lv + 1.0) * s;
  }
  return m_prefactor * acc;
}

}  // namespace

double scaling_factor(int n_in, int m_out, double r) {
  if (n_in < 1 || m_out < n_in)
    throw std::invalid_argument("scaling_factor: need M >= N >= 1");
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("scaling_factor: r must lie in [0,1]");
  return scaling_factor_impl(n_in, double(m_out + 2) / double(m_out), r);
}

double scaling_factor_infinite(int n_in, double r) {
  if (n_in < 1) throw std::invalid_argument("scaling_factor_infinite: N >= 1");
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("scaling_factor_infinite: r must lie in [0,1]");
  return scaling_factor_impl(n_in, 1.0, r);
}

UniversalOutput output_state(int n_in, int m_out, double r) {
  if (n_in < 1 || m_out < n_in)
    throw std::invalid_argument("output_state: need M >= N >= 1");
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("output_state: r must lie in [0,1]");
  UniversalOutput out;
  out.n_in = n_in;
  out.m_out = m_out;
  out.r = r;
  out.purification = (m_out == n_in);
  out.sigma = Eigen::VectorXd::Zero(m_out + 1);
  // sigma_m = sum_l (2l+1)/(M-2l+1) d_l sum_n
  //             <M/2 m, l n | M/2-l, m+n>^2 w~_{l,n},
  // with w~ the weights of the complementary state, w~_{l,n} = w_{l,-n}.
  for (int two_l = lowest_two_j(n_in); two_l <= n_in; two_l += 2) {
    const double d = spin::multiplicity(n_in, SpinLabel(two_l));
    const int two_J = m_out - two_l;
    const double coeff = double(two_l + 1) / double(two_J + 1) * d;
    for (int two_n = -two_l; two_n <= two_l; two_n += 2) {
      const double wt = spin::block_weight(n_in, two_l, -two_n, r);
      if (wt == 0.0) continue;
      for (int two_m = -m_out; two_m <= m_out; two_m += 2) {
        if (std::abs(two_m + two_n) > two_J) continue;
        const double cg = spin::clebsch_gordan(m_out, two_m, two_l, two_n,
                                               two_J, two_m + two_n);
        out.sigma((two_m + m_out) / 2) += coeff * cg * cg * wt;
      }
    }
  }
  return out;
}

}  // namespace superb::universal
