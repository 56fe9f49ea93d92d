#include "superb/spin_algebra.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace superb::spin {

namespace {

// log(n!) for integer n, memoised. Arguments stay below a few thousand
// for every supported size.
double log_factorial(int n) {
  static constexpr int kMax = 4096;
  static const std::vector<double> table = [] {
    std::vector<double> t(kMax + 1);
    for (int i = 0; i <= kMax; ++i) t[i] = std::lgamma(double(i) + 1.0);
    return t;
  }();
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  if (n <= kMax) return table[n];
  return std::lgamma(double(n) + 1.0);
}

// n! argument given as a doubled integer; must be even and nonnegative.
double log_factorial_doubled(int two_n) {
  if (two_n % 2 != 0)
    throw std::domain_error("log_factorial_doubled: half-integer argument");
  return log_factorial(two_n / 2);
}

}  // namespace

double multiplicity(int m_qubits, SpinLabel j) {
  if (m_qubits < 1) throw std::invalid_argument("multiplicity: need M >= 1");
  const int two_j = j.two_j;
  if (two_j > m_qubits || (m_qubits - two_j) % 2 != 0)
    throw std::invalid_argument(
        "multiplicity: j outside the ladder j0..M/2 for M = " +
        std::to_string(m_qubits));
  // d_j = (2j+1)/(M/2+j+1) * C(M, M/2-j); all of M/2+j+1 and M/2-j are
  // integers when 2j and M share parity.
  const int k = (m_qubits - two_j) / 2;            // M/2 - j
  const int denom = (m_qubits + two_j) / 2 + 1;    // M/2 + j + 1
  const double log_d = std::log(double(two_j + 1)) - std::log(double(denom)) +
                       log_factorial(m_qubits) - log_factorial(k) -
                       log_factorial(m_qubits - k);
  const double d = std::exp(log_d);
  if (d < 9.0e15) {  // snap to the exact integer when representable
    const double r = std::round(d);
    if (std::abs(d - r) < 1e-6 * std::max(1.0, r)) return r;
  }
  return d;
}

Eigen::MatrixXd jz_matrix(SpinLabel l) {
  const int dim = l.dim();
  Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) jz(i, i) = -l.value() + i;
  return jz;
}

double jx_offdiag(SpinLabel j, int two_m) {
  const double jj = j.value();
  const double m = 0.5 * two_m;
  return 0.5 * std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
}

Eigen::MatrixXd jx_matrix(SpinLabel l) {
  const int dim = l.dim();
  Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i + 1 < dim; ++i) {
    const int two_m = -l.two_j + 2 * i;
    const double t = jx_offdiag(l, two_m);
    jx(i, i + 1) = t;
    jx(i + 1, i) = t;
  }
  return jx;
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M) {
  if (two_j1 < 0 || two_j2 < 0 || two_J < 0)
    throw std::invalid_argument("clebsch_gordan: negative spin");
  if (!magnetic_in_range(two_j1, two_m1) || !magnetic_in_range(two_j2, two_m2))
    throw std::invalid_argument("clebsch_gordan: magnetic number out of range");

  // Selection rules: vanishing, not invalid.
  if (two_m1 + two_m2 != two_M) return 0.0;
  if (std::abs(two_M) > two_J) return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  if ((two_j1 + two_j2 + two_J) % 2 != 0) return 0.0;

  // Racah's formula. Every factorial argument below is an integer once the
  // selection rules hold; they are kept doubled until the final division.
  const double log_pref =
      std::log(double(two_J + 1)) +
      log_factorial_doubled(two_j1 + two_j2 - two_J) +
      log_factorial_doubled(two_j1 - two_j2 + two_J) +
      log_factorial_doubled(-two_j1 + two_j2 + two_J) -
      log_factorial_doubled(two_j1 + two_j2 + two_J + 2) +
      log_factorial_doubled(two_J + two_M) + log_factorial_doubled(two_J - two_M) +
      log_factorial_doubled(two_j1 - two_m1) + log_factorial_doubled(two_j1 + two_m1) +
      log_factorial_doubled(two_j2 - two_m2) + log_factorial_doubled(two_j2 + two_m2);

  const int two_kmin = std::max({0, -(two_J - two_j2 + two_m1),
                                 -(two_J - two_j1 - two_m2)});
  const int two_kmax = std::min({two_j1 + two_j2 - two_J, two_j1 - two_m1,
                                 two_j2 + two_m2});
  double sum = 0.0;
  for (int two_k = two_kmin; two_k <= two_kmax; two_k += 2) {
    const double log_den =
        log_factorial_doubled(two_k) +
        log_factorial_doubled(two_j1 + two_j2 - two_J - two_k) +
        log_factorial_doubled(two_j1 - two_m1 - two_k) +
        log_factorial_doubled(two_j2 + two_m2 - two_k) +
        log_factorial_doubled(two_J - two_j2 + two_m1 + two_k) +
        log_factorial_doubled(two_J - two_j1 - two_m2 + two_k);
    const double term = std::exp(0.5 * log_pref - log_den);
    sum += ((two_k / 2) % 2 == 0) ? term : -term;
  }
  return sum;
}

WignerHalfPi wigner_half_pi(SpinLabel l) {
  const int dim = l.dim();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jx_matrix(l));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("wigner_half_pi: eigen-decomposition failed for 2l = " +
                             std::to_string(l.two_j));
  Eigen::MatrixXd w = solver.eigenvectors();
  const Eigen::VectorXd ev = solver.eigenvalues();
  // Eigenvalues must be the exact ladder -l..l; anything else means the
  // solver lost the spectrum.
  for (int i = 0; i < dim; ++i) {
    const double expected = -l.value() + i;
    if (std::abs(ev(i) - expected) > 0.25)
      throw std::runtime_error("wigner_half_pi: numerical degeneracy at 2l = " +
                               std::to_string(l.two_j));
  }
  // Column sign fix: the bottom row <l,-l|l^x,b> of d^{(l)}(pi/2) is
  // strictly positive.
  for (int b = 0; b < dim; ++b)
    if (w(0, b) < 0.0) w.col(b) = -w.col(b);
  return WignerHalfPi{l, std::move(w)};
}

const WignerHalfPi& wigner_half_pi_cached(SpinLabel l) {
  static std::shared_mutex mutex;
  static std::map<int, WignerHalfPi> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(l.two_j);
    if (it != cache.end()) return it->second;
  }
  WignerHalfPi computed = wigner_half_pi(l);
  std::unique_lock lock(mutex);
  return cache.try_emplace(l.two_j, std::move(computed)).first->second;
}

double block_weight(int n_copies, int two_l, int two_m, double r) {
  if (r < 0.0 || r > 1.0)
    throw std::invalid_argument("block_weight: r must lie in [0,1]");
  if (two_l > n_copies || (n_copies - two_l) % 2 != 0)
    throw std::invalid_argument("block_weight: 2l must match N in range and parity");
  if (!magnetic_in_range(two_l, two_m))
    throw std::invalid_argument("block_weight: m out of range");
  const double rp = 0.5 * (1.0 + r);
  const double rm = 0.5 * (1.0 - r);
  const int e0 = (n_copies - two_l) / 2;  // N/2 - l
  const int ep = (two_l + two_m) / 2;     // l + m
  const int em = (two_l - two_m) / 2;     // l - m
  // Zero bases with positive exponents short-circuit so that r = 1 stays
  // exact instead of producing 0 * log(0).
  if (rm == 0.0 && (e0 > 0 || em > 0)) return 0.0;
  double log_w = 0.0;
  if (e0 > 0) log_w += e0 * std::log(rp * rm);
  if (ep > 0) log_w += ep * std::log(rp);
  if (em > 0) log_w += em * std::log(rm);
  return std::exp(log_w);
}

Eigen::VectorXd block_weights_vector(int n_copies, int two_l, double r) {
  Eigen::VectorXd g(two_l + 1);
  g(two_l) = block_weight(n_copies, two_l, two_l, r);
  const double rp = 0.5 * (1.0 + r);
  const double ratio = 0.5 * (1.0 - r) / rp;
  for (int i = two_l; i > 0; --i) g(i - 1) = g(i) * ratio;
  return g;
}

Eigen::MatrixXd jx_weighted_exponential(SpinLabel l, double r, int n_copies) {
  const WignerHalfPi& w = wigner_half_pi_cached(l);
  const int dim = l.dim();
  Eigen::VectorXd g(dim);
  for (int i = 0; i < dim; ++i)
    g(i) = block_weight(n_copies, l.two_j, -l.two_j + 2 * i, r);
  return w.entries * g.asDiagonal() * w.entries.transpose();
}

Eigen::VectorXd jx_weighted_exponential_superdiag(SpinLabel l, double r,
                                                  int n_copies) {
  const WignerHalfPi& w = wigner_half_pi_cached(l);
  const int dim = l.dim();
  Eigen::VectorXd g(dim);
  for (int i = 0; i < dim; ++i)
    g(i) = block_weight(n_copies, l.two_j, -l.two_j + 2 * i, r);
  Eigen::VectorXd diag1(std::max(dim - 1, 0));
  for (int i = 0; i + 1 < dim; ++i) {
    double acc = 0.0;
    for (int c = 0; c < dim; ++c) acc += w.entries(i, c) * g(c) * w.entries(i + 1, c);
    diag1(i) = acc;
  }
  return diag1;
}

}  // namespace superb::spin
