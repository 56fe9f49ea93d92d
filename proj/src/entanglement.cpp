#include "superb/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace superb::ent {

namespace {

Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& rho) {
  // sy (x) sy is real: antidiagonal (-1, 1, 1, -1).
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * rho.conjugate() * yy;
}

Eigen::Matrix4cd hermitian_sqrt(const Eigen::Matrix4cd& a, double psd_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("concurrence: eigen-decomposition failed");
  Eigen::Vector4d ev = solver.eigenvalues();
  if (ev.minCoeff() < -psd_tol)
    throw std::domain_error("concurrence: input is not positive semidefinite");
  Eigen::Vector4d root = ev.cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * root.asDiagonal() *
         solver.eigenvectors().adjoint();
}

double binary_entropy(double x) {
  double acc = 0.0;
  if (x > 0.0) acc -= x * std::log2(x);
  if (x < 1.0) acc -= (1.0 - x) * std::log2(1.0 - x);
  return acc;
}

}  // namespace

ConcurrenceResult concurrence(const Eigen::Matrix4cd& rho2) {
  if ((rho2 - rho2.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::domain_error("concurrence: input is not Hermitian");
  if (std::abs(rho2.trace().real() - 1.0) > 1e-8)
    throw std::domain_error("concurrence: input must have unit trace");

  ConcurrenceResult res;
  Eigen::Vector4d ev;
  if (rho2.imag().cwiseAbs().maxCoeff() < 1e-14) {
    // Real state: rho~ = Y rho Y and sqrt(rho) Y sqrt(rho) is similar to
    // Y rho, so the lambdas are |eig(Y rho)|. This route needs no matrix
    // square root, which would cost half the working precision on the
    // near-null eigenvalues.
    hermitian_sqrt(rho2, 1e-10);  // positivity gate
    Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4d m = yy * rho2.real();
    Eigen::EigenSolver<Eigen::Matrix4d> solver(m);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("concurrence: eigen-decomposition failed");
    ev = solver.eigenvalues().cwiseAbs();
    std::sort(ev.data(), ev.data() + 4);
  } else {
    // Eigenvalues of Psi = sqrt(sqrt(rho) rho~ sqrt(rho)); the inner
    // matrix is Hermitian PSD whether or not rho and rho~ commute.
    const Eigen::Matrix4cd root = hermitian_sqrt(rho2, 1e-10);
    const Eigen::Matrix4cd inner = root * spin_flip(rho2) * root;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(inner);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("concurrence: eigen-decomposition failed");
    ev = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  }
  for (int i = 0; i < 4; ++i) res.lambdas[i] = ev(3 - i);  // descending
  const double raw = res.lambdas[0] - res.lambdas[1] - res.lambdas[2] -
                     res.lambdas[3];
  res.concurrence = std::clamp(raw, 0.0, 1.0);
  res.entanglement_of_formation = entanglement_of_formation(res.concurrence);
  return res;
}

double concurrence_triangle(const TriangleCoords& t) {
  if (!t.physical())
    throw std::domain_error("concurrence_triangle: unphysical coordinates");
  const double disc =
      1.0 - 2.0 * t.alpha + t.alpha * t.alpha - 4.0 * t.beta * t.beta;
  if (t.alpha <= 0.5 * (1.0 - 4.0 * t.beta * t.beta)) return 0.0;
  return t.alpha - std::sqrt(std::max(disc, 0.0));
}

double entanglement_of_formation(double c) {
  if (c < 0.0 || c > 1.0)
    throw std::domain_error("entanglement_of_formation: C must lie in [0,1]");
  const double x = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return binary_entropy(x);
}

TriangleCoords triangle_coords(const reduced::TwoQubitState& rho2,
                               double tol) {
  const auto& t = rho2.triplet;
  // Preconditions: diagonal triplet block (commutes with J_z), no singlet
  // component, swap symmetry (automatic for a triplet-supported state).
  double offdiag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (i != k) offdiag = std::max(offdiag, std::abs(t(i, k)));
  if (offdiag > tol)
    throw std::domain_error(
        "triangle_coords: input does not commute with J_z^(1)");
  const Eigen::Matrix4cd embedded = reduced::embed_triplet(rho2.triplet);
  if ((rho2.rho - embedded).cwiseAbs().maxCoeff() > std::max(tol, 1e-12))
    throw std::domain_error(
        "triangle_coords: input has weight outside the triplet block");

  // Least squares of diag(t) = (alpha - beta + gamma, alpha,
  // alpha + beta + gamma) under the trace constraint 3 alpha + 2 gamma = 1.
  const double d0 = t(0, 0).real();
  const double d1 = t(1, 1).real();
  const double d2 = t(2, 2).real();
  TriangleCoords coords{0.5 * (d2 - d0), d1};
  const double gamma = coords.gamma();
  const double residual =
      std::max({std::abs(d0 - (coords.alpha - coords.beta + gamma)),
                std::abs(d2 - (coords.alpha + coords.beta + gamma)),
                std::abs(d0 + d1 + d2 - 1.0)});
  if (residual > tol)
    throw std::domain_error("triangle_coords: fit residual above tolerance");
  return coords;
}

Eigen::Matrix4cd reconstruct(const TriangleCoords& t) {
  if (!t.physical())
    throw std::domain_error("reconstruct: unphysical coordinates");
  Eigen::Matrix3cd triplet = Eigen::Matrix3cd::Zero();
  triplet(0, 0) = t.alpha - t.beta + t.gamma();
  triplet(1, 1) = t.alpha;
  triplet(2, 2) = t.alpha + t.beta + t.gamma();
  return reduced::embed_triplet(triplet);
}

}  // namespace superb::ent
