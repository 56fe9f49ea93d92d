#pragma once

#include <string>
#include <vector>

#include "superb/scan.hpp"
#include "superb/thresholds.hpp"

namespace superb::figures {

using thresholds::Family;

/// Scaling-factor curve row: p^{N,M}(r) at one grid point.
struct CurveRow {
  int n = 0;
  double r = 0.0;
  double p = 0.0;
};

/// Threshold row: 1 - r_*(N, M) for one N of a named series
/// ("n_plus_one" or "m_star").
struct ThresholdRow {
  std::string series;
  int n = 0;
  double one_minus_rstar = 0.0;
};

/// Entanglement row: concurrence and EoF of the double-site reduced
/// output at one grid point.
struct EntRow {
  std::string family;
  int n = 0;
  double r = 0.0;
  double concurrence = 0.0;
  double entanglement = 0.0;
};

std::vector<double> r_grid(double lo, double hi, double step);

/// Universal p^{N,N+1}(r), N = 10..100 in steps of 10.
std::vector<CurveRow> fig1(ExecPolicy policy = ExecPolicy::parallel);

/// Universal 1 - r_*(N, N+1) and 1 - r_*(N, M_*(N)), N = 4..100.
std::vector<ThresholdRow> fig2(ExecPolicy policy = ExecPolicy::parallel);

/// Phase-covariant p^{N,N+1}(r), N = 4..100 in steps of 8.
std::vector<CurveRow> fig3(ExecPolicy policy = ExecPolicy::parallel);

/// Phase-covariant 1 - r_*(N, N+1) and 1 - r_*(N, M_*(N)), N = 3..100.
std::vector<ThresholdRow> fig4(ExecPolicy policy = ExecPolicy::parallel);

/// EoF of the double-site output, both families, N = 2,4,6,8,10, M = N+1.
std::vector<EntRow> fig5(ExecPolicy policy = ExecPolicy::parallel);

/// Concurrence / EoF curve for one (family, N, M) on a caller grid.
std::vector<EntRow> entanglement_curve(Family family, int n_in, int m_out,
                                       const std::vector<double>& grid,
                                       ExecPolicy policy = ExecPolicy::parallel);

/// Scaling curve for one (family, N, M) on a caller grid.
std::vector<CurveRow> scaling_curve(Family family, int n_in, long m_out,
                                    const std::vector<double>& grid,
                                    ExecPolicy policy = ExecPolicy::parallel);

/// Points (N, 1 - r_*) of a named series restricted to N in
/// [n_min, n_max], as input for power-law fits.
std::vector<std::pair<double, double>> series_points(
    const std::vector<ThresholdRow>& rows, const std::string& series,
    int n_min, int n_max);

}  // namespace superb::figures
