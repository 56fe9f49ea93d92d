#pragma once

#include <optional>
#include <vector>

#include "superb/phase_covariant.hpp"
#include "superb/scan.hpp"

namespace superb::thresholds {

enum class Family { universal, phase };

inline const char* family_name(Family f) {
  return f == Family::universal ? "universal" : "phase";
}

/// Marker for the M -> infinity curve. The universal family has the closed
/// limit formula; the phase family is evaluated at the large-M proxy
/// kPhaseInfinityProxy (relative 1/M corrections ~1e-4).
inline constexpr long kInfiniteM = -1;
inline constexpr long kPhaseInfinityProxy = 1L << 14;

/// p(r) for a fixed (family, N, M) with per-curve precomputation, cheap to
/// evaluate on dense r grids.
class ScalingCurve {
 public:
  ScalingCurve(Family family, int n_in, long m_out);
  double operator()(double r) const;

  Family family() const { return family_; }
  int n_in() const { return n_in_; }
  long m_out() const { return m_out_; }

 private:
  Family family_;
  int n_in_;
  long m_out_;
  std::optional<phase::ScalingEvaluator> phase_eval_;
};

struct ThresholdResult {
  Family family = Family::universal;
  int n_in = 0;
  long m_out = 0;  // kInfiniteM for the limit curve
  std::optional<double> r_star;   // largest crossing of p = 1, if any
  std::vector<double> crossings;  // every crossing found, ascending
  double max_p = 0.0;
  double argmax_r = 0.0;
};

/// Scans p - 1 on a 2000-point r grid, bisects every bracketed sign change
/// to 1e-12 and reports the largest root. Absence of a root (max_p <= 1)
/// is a valid result. p is not assumed unimodal.
ThresholdResult r_star(Family family, int n_in, long m_out,
                       ExecPolicy policy = ExecPolicy::parallel);

struct MStarResult {
  enum class Kind { finite, infinite, none };
  Family family = Family::universal;
  int n_in = 0;
  Kind kind = Kind::none;
  long m_star = 0;                // valid when kind == finite
  bool infinite_by_proxy = false; // phase family: large-M proxy criterion
  long search_cap = 0;
};

/// Largest M with sup_r p^{N,M} > 1. Checks the M = infinity criterion
/// first (closed form for universal, the 2^10/2^12/2^14 proxy with margin
/// 1e-6 for phase), then binary-searches M using monotonicity in M.
MStarResult m_star(Family family, int n_in,
                   ExecPolicy policy = ExecPolicy::parallel);

inline constexpr long kMStarSearchCap = 1000000;

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Least-squares fit of log y = log A + s log N over (N, y) points;
/// requires at least 5 points, all positive.
PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace superb::thresholds
