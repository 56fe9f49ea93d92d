#include "superb/figures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superb/entanglement.hpp"
#include "superb/reduced_states.hpp"

namespace superb::figures {

std::vector<double> r_grid(double lo, double hi, double step) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo < hi) || !(step > 0.0))
    throw std::invalid_argument("r_grid: need 0 <= lo < hi <= 1, step > 0");
  const int count = static_cast<int>(std::round((hi - lo) / step));
  if (std::abs(lo + count * step - hi) > 1e-9 * std::max(1.0, hi))
    throw std::invalid_argument("r_grid: step does not divide the range");
  std::vector<double> grid(count + 1);
  for (int i = 0; i <= count; ++i) grid[i] = lo + i * step;
  grid.back() = hi;
  return grid;
}

std::vector<CurveRow> scaling_curve(Family family, int n_in, long m_out,
                                    const std::vector<double>& grid,
                                    ExecPolicy policy) {
  const thresholds::ScalingCurve curve(family, n_in, m_out);
  std::vector<CurveRow> rows(grid.size());
  for_each_index(grid.size(), policy, [&](std::size_t i) {
    rows[i] = CurveRow{n_in, grid[i], curve(grid[i])};
  });
  return rows;
}

namespace {

std::vector<CurveRow> curve_family(Family family, const std::vector<int>& ns,
                                   ExecPolicy policy) {
  const auto grid = r_grid(0.0, 1.0, 0.005);
  std::vector<CurveRow> rows(ns.size() * grid.size());
  for_each_index(ns.size(), policy, [&](std::size_t i) {
    const auto one = scaling_curve(family, ns[i], ns[i] + 1, grid,
                                   ExecPolicy::serial);
    std::copy(one.begin(), one.end(), rows.begin() + i * grid.size());
  });
  return rows;
}

std::vector<ThresholdRow> threshold_family(Family family,
                                           const std::vector<int>& ns,
                                           ExecPolicy policy) {
  std::vector<ThresholdRow> n_plus_one(ns.size());
  std::vector<ThresholdRow> m_star(ns.size());
  for_each_index(ns.size(), policy, [&](std::size_t i) {
    const int n = ns[i];
    const auto near = thresholds::r_star(family, n, n + 1,
                                         ExecPolicy::serial);
    n_plus_one[i] = {"n_plus_one", n, 1.0 - near.r_star.value_or(1.0)};

    const auto ms = thresholds::m_star(family, n, ExecPolicy::serial);
    long m = thresholds::kInfiniteM;
    if (ms.kind == thresholds::MStarResult::Kind::finite) m = ms.m_star;
    const auto far = thresholds::r_star(family, n, m, ExecPolicy::serial);
    m_star[i] = {"m_star", n, 1.0 - far.r_star.value_or(1.0)};
  });
  std::vector<ThresholdRow> rows;
  rows.insert(rows.end(), n_plus_one.begin(), n_plus_one.end());
  rows.insert(rows.end(), m_star.begin(), m_star.end());
  return rows;
}

}  // namespace

std::vector<CurveRow> fig1(ExecPolicy policy) {
  std::vector<int> ns;
  for (int n = 10; n <= 100; n += 10) ns.push_back(n);
  return curve_family(Family::universal, ns, policy);
}

std::vector<ThresholdRow> fig2(ExecPolicy policy) {
  std::vector<int> ns;
  for (int n = 4; n <= 100; ++n) ns.push_back(n);
  return threshold_family(Family::universal, ns, policy);
}

std::vector<CurveRow> fig3(ExecPolicy policy) {
  std::vector<int> ns;
  for (int n = 4; n <= 100; n += 8) ns.push_back(n);
  return curve_family(Family::phase, ns, policy);
}

std::vector<ThresholdRow> fig4(ExecPolicy policy) {
  std::vector<int> ns;
  for (int n = 3; n <= 100; ++n) ns.push_back(n);
  return threshold_family(Family::phase, ns, policy);
}

std::vector<EntRow> entanglement_curve(Family family, int n_in, int m_out,
                                       const std::vector<double>& grid,
                                       ExecPolicy policy) {
  std::vector<EntRow> rows(grid.size());
  for_each_index(grid.size(), policy, [&](std::size_t i) {
    const double r = grid[i];
    const auto two =
        family == Family::universal
            ? reduced::two_site(universal::output_state(n_in, m_out, r))
            : reduced::two_site(phase::output_state(n_in, m_out, r));
    const auto res = ent::concurrence(two.rho);
    rows[i] = {thresholds::family_name(family), n_in, r, res.concurrence,
               res.entanglement_of_formation};
  });
  return rows;
}

std::vector<EntRow> fig5(ExecPolicy policy) {
  const auto grid = r_grid(0.0, 1.0, 0.005);
  std::vector<EntRow> rows;
  for (Family family : {Family::universal, Family::phase})
    for (int n = 2; n <= 10; n += 2) {
      const auto one = entanglement_curve(family, n, n + 1, grid, policy);
      rows.insert(rows.end(), one.begin(), one.end());
    }
  return rows;
}

std::vector<std::pair<double, double>> series_points(
    const std::vector<ThresholdRow>& rows, const std::string& series,
    int n_min, int n_max) {
  std::vector<std::pair<double, double>> points;
  for (const auto& row : rows)
    if (row.series == series && row.n >= n_min && row.n <= n_max)
      points.emplace_back(double(row.n), row.one_minus_rstar);
  return points;
}

}  // namespace superb::figures
