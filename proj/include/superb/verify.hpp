#pragma once

#include <string>
#include <vector>

#include "superb/oracle.hpp"
#include "superb/scan.hpp"

namespace superb::verify {

struct Options {
  int max_total_qubits = 10;        // cases with N + M <= this bound
  double tolerance = 1e-9;          // analytic vs oracle
  ExecPolicy policy = ExecPolicy::parallel;
};

struct CaseResult {
  oracle::Family family;
  int n_in = 0;
  int m_out = 0;
  bool passed = false;
  double tp_error = 0.0;
  bool psd_ok = false;
  double min_eigenvalue = 0.0;  // NaN when not computed exactly
  double covariance_max = 0.0;
  double permutation_max = 0.0;
  double scaling_max_diff = 0.0;       // |p_analytic - p_oracle| over r
  double output_max_diff = 0.0;        // embedded global output, entrywise
  double single_site_max_diff = 0.0;
  double two_site_max_diff = 0.0;
  double outside_symmetric = 0.0;      // universal output support leak
  std::vector<std::string> failures;
};

struct Report {
  bool all_passed = false;
  std::vector<CaseResult> cases;
  std::string to_json() const;  // machine-readable report
};

/// Runs every (N, M) with M >= N and N + M within the bound for both
/// families: Choi invariants (TP, PSD, covariance, permutation
/// invariance) plus the analytic-vs-oracle equivalences for the scaling
/// factor, the global output state and the reduced states on
/// r in {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}.
Report run_suite(const Options& opts = {});

}  // namespace superb::verify
