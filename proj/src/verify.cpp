#include "superb/verify.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "superb/reduced_states.hpp"

namespace superb::verify {

namespace {

using oracle::Family;

const std::vector<double> kSampleR = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99};

Eigen::MatrixXd analytic_output_dense(Family family, int n, int m, double r) {
  const Eigen::MatrixXd dicke = oracle::dicke_matrix(m);
  if (family == Family::universal) {
    const auto out = universal::output_state(n, m, r);
    return dicke * out.sigma.asDiagonal() * dicke.transpose();
  }
  const auto out = phase::output_state(n, m, r);
  return dicke * out.matrix * dicke.transpose();
}

double analytic_scaling(Family family, int n, int m, double r) {
  return family == Family::universal ? universal::scaling_factor(n, m, r)
                                     : phase::scaling_factor(n, m, r);
}

reduced::SingleQubitState analytic_single(Family family, int n, int m,
                                          double r) {
  if (family == Family::universal)
    return reduced::single_site(universal::output_state(n, m, r));
  return reduced::single_site(phase::output_state(n, m, r));
}

reduced::TwoQubitState analytic_two(Family family, int n, int m, double r) {
  if (family == Family::universal)
    return reduced::two_site(universal::output_state(n, m, r));
  return reduced::two_site(phase::output_state(n, m, r));
}

CaseResult run_case(Family family, int n, int m, double tol) {
  CaseResult res;
  res.family = family;
  res.n_in = n;
  res.m_out = m;

  std::vector<oracle::DenseChoi> branches;
  if (family == Family::universal) {
    branches.push_back(oracle::build_choi_universal(n, m));
  } else if ((m - n) % 2 == 0) {
    branches.push_back(oracle::build_choi_phase(n, m, 0));
  } else {
    branches.push_back(oracle::build_choi_phase(n, m, +1));
    branches.push_back(oracle::build_choi_phase(n, m, -1));
  }

  res.psd_ok = true;
  for (const auto& choi : branches) {
    const auto inv = oracle::check_invariants(choi);
    res.tp_error = std::max(res.tp_error, inv.tp_error);
    res.psd_ok = res.psd_ok && inv.psd_shifted;
    res.min_eigenvalue = inv.min_eigenvalue;
    if (inv.tp_error > 1e-9) res.failures.push_back("trace preservation");
    if (!inv.psd_shifted) res.failures.push_back("positivity");
    if (!std::isnan(inv.min_eigenvalue) && inv.min_eigenvalue < -1e-9)
      res.failures.push_back("negative eigenvalue");

    const auto cov = oracle::check_covariance(choi);
    res.covariance_max = std::max(res.covariance_max, cov.max_commutator);
    res.permutation_max = std::max(res.permutation_max, cov.max_permutation);
    if (cov.max_commutator > 1e-9) res.failures.push_back("covariance");
    if (cov.max_permutation > 1e-9)
      res.failures.push_back("permutation invariance");
  }

  const product::Axis axis =
      family == Family::universal ? product::Axis::z : product::Axis::x;
  for (double r : kSampleR) {
    Eigen::MatrixXd sigma;
    if (branches.size() == 1)
      sigma = oracle::apply_channel(branches[0], r, axis);
    else
      sigma = 0.5 * (oracle::apply_channel(branches[0], r, axis) +
                     oracle::apply_channel(branches[1], r, axis));

    // scaling factor through the dense single-site marginal
    const Eigen::MatrixXd one = oracle::trace_to_first(sigma, m, 1);
    const double r_prime = (family == Family::universal)
                               ? one(0, 0) - one(1, 1)
                               : 2.0 * one(0, 1);
    res.scaling_max_diff =
        std::max(res.scaling_max_diff,
                 std::abs(r_prime / r - analytic_scaling(family, n, m, r)));

    res.output_max_diff = std::max(
        res.output_max_diff,
        (sigma - analytic_output_dense(family, n, m, r)).cwiseAbs().maxCoeff());

    const auto single = analytic_single(family, n, m, r);
    res.single_site_max_diff =
        std::max(res.single_site_max_diff,
                 (one.cast<std::complex<double>>() - single.rho)
                     .cwiseAbs()
                     .maxCoeff());

    if (m >= 2) {
      const Eigen::MatrixXd two = oracle::trace_to_first(sigma, m, 2);
      const auto two_analytic = analytic_two(family, n, m, r);
      res.two_site_max_diff =
          std::max(res.two_site_max_diff,
                   (two.cast<std::complex<double>>() - two_analytic.rho)
                       .cwiseAbs()
                       .maxCoeff());
    }

    if (family == Family::universal)
      res.outside_symmetric = std::max(
          res.outside_symmetric,
          std::abs(oracle::weight_outside_symmetric(sigma, m)));
  }
  if (res.scaling_max_diff > tol) res.failures.push_back("scaling factor");
  if (res.output_max_diff > tol) res.failures.push_back("global output");
  if (res.single_site_max_diff > tol) res.failures.push_back("single site");
  if (res.two_site_max_diff > tol) res.failures.push_back("two site");
  if (res.outside_symmetric > 1e-10)
    res.failures.push_back("symmetric support");

  res.passed = res.failures.empty();
  return res;
}

}  // namespace

Report run_suite(const Options& opts) {
  std::vector<std::pair<Family, std::pair<int, int>>> cases;
  for (Family family : {Family::universal, Family::phase})
    for (int n = 1; n <= opts.max_total_qubits; ++n)
      for (int m = n; n + m <= opts.max_total_qubits; ++m)
        cases.push_back({family, {n, m}});

  Report report;
  report.cases.resize(cases.size());
  for_each_index(cases.size(), opts.policy, [&](std::size_t i) {
    report.cases[i] = run_case(cases[i].first, cases[i].second.first,
                               cases[i].second.second, opts.tolerance);
  });
  report.all_passed = true;
  for (const auto& c : report.cases) report.all_passed &= c.passed;
  return report;
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["all_passed"] = all_passed;
  doc["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json entry;
    entry["family"] = thresholds::family_name(c.family);
    entry["n"] = c.n_in;
    entry["m"] = c.m_out;
    entry["passed"] = c.passed;
    entry["tp_error"] = c.tp_error;
    entry["psd_ok"] = c.psd_ok;
    if (!std::isnan(c.min_eigenvalue))
      entry["min_eigenvalue"] = c.min_eigenvalue;
    entry["covariance_max"] = c.covariance_max;
    entry["permutation_max"] = c.permutation_max;
    entry["scaling_max_diff"] = c.scaling_max_diff;
    entry["output_max_diff"] = c.output_max_diff;
    entry["single_site_max_diff"] = c.single_site_max_diff;
    entry["two_site_max_diff"] = c.two_site_max_diff;
    if (c.family == oracle::Family::universal)
      entry["outside_symmetric"] = c.outside_symmetric;
    entry["failures"] = c.failures;
    doc["cases"].push_back(entry);
  }
  return doc.dump(2);
}

}  // namespace superb::verify
