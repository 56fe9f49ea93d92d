#include "superb/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "superb/universal.hpp"

namespace superb::thresholds {

ScalingCurve::ScalingCurve(Family family, int n_in, long m_out)
    : family_(family), n_in_(n_in), m_out_(m_out) {
  if (n_in < 1) throw std::invalid_argument("ScalingCurve: need N >= 1");
  if (m_out != kInfiniteM && m_out < n_in)
    throw std::invalid_argument("ScalingCurve: need M >= N");
  if (family == Family::phase) {
    const long m = (m_out == kInfiniteM) ? kPhaseInfinityProxy : m_out;
    phase_eval_.emplace(n_in, static_cast<int>(m));
  }
}

double ScalingCurve::operator()(double r) const {
  if (family_ == Family::phase) return (*phase_eval_)(r);
  if (m_out_ == kInfiniteM) return universal::scaling_factor_infinite(n_in_, r);
  return universal::scaling_factor(n_in_, static_cast<int>(m_out_), r);
}

namespace {

constexpr int kGridPoints = 2000;
constexpr double kBisectWidth = 1e-13;
// Distinguishes genuine sup_r p > 1 from round-off at p = 1 (the identity
// channel sits exactly on the boundary).
constexpr double kExceedGuard = 1e-12;

double bisect_crossing(const ScalingCurve& p, double lo, double hi,
                       double flo) {
  // f = p - 1 changes sign on [lo, hi]
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fmid = p(mid) - 1.0;
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section refinement of the maximum on [lo, hi].
std::pair<double, double> refine_max(const ScalingCurve& p, double lo,
                                     double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = p(x1), f2 = p(x2);
  for (int it = 0; it < 90 && b - a > 1e-14; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = p(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = p(x1);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, p(x)};
}

ThresholdResult scan_curve(const ScalingCurve& p, ExecPolicy policy) {
  ThresholdResult res;
  res.family = p.family();
  res.n_in = p.n_in();
  res.m_out = p.m_out();

  // values at r = 0 (analytic limit) and the grid i/kGridPoints, i >= 1
  std::vector<double> value(kGridPoints + 1);
  for_each_index(kGridPoints + 1, policy, [&](std::size_t i) {
    value[i] = p(double(i) / kGridPoints);
  });

  int best = 0;
  for (int i = 1; i <= kGridPoints; ++i)
    if (value[i] > value[best]) best = i;

  const double lo = double(std::max(best - 1, 0)) / kGridPoints;
  const double hi = double(std::min(best + 1, kGridPoints)) / kGridPoints;
  auto [argmax, maxp] = refine_max(p, lo, hi);
  if (maxp < value[best]) {  // grid point already at the top
    argmax = double(best) / kGridPoints;
    maxp = value[best];
  }
  res.argmax_r = argmax;
  res.max_p = maxp;

  for (int i = 1; i <= kGridPoints; ++i) {
    const double f0 = value[i - 1] - 1.0;
    const double f1 = value[i] - 1.0;
    if ((f0 > 0.0 && f1 < 0.0) || (f0 < 0.0 && f1 > 0.0))
      res.crossings.push_back(bisect_crossing(p, double(i - 1) / kGridPoints,
                                              double(i) / kGridPoints, f0));
    else if (f1 == 0.0 && f0 != 0.0)
      res.crossings.push_back(double(i) / kGridPoints);
  }
  if (res.max_p > 1.0 + kExceedGuard && !res.crossings.empty())
    res.r_star = res.crossings.back();
  return res;
}

}  // namespace

ThresholdResult r_star(Family family, int n_in, long m_out,
                       ExecPolicy policy) {
  return scan_curve(ScalingCurve(family, n_in, m_out), policy);
}

namespace {

double sup_p(Family family, int n_in, long m_out, ExecPolicy policy) {
  return scan_curve(ScalingCurve(family, n_in, m_out), policy).max_p;
}

// Largest M in [N+1, cap] with sup_r p > 1, using monotonicity of the
// optimum in M; nullopt when even M = N+1 fails.
std::optional<long> largest_superbroadcasting_m(Family family, int n_in,
                                                ExecPolicy policy) {
  const auto exceeds = [&](long m) {
    return sup_p(family, n_in, m, policy) > 1.0 + kExceedGuard;
  };
  if (!exceeds(n_in + 1)) return std::nullopt;
  long lo = n_in + 1;  // known true
  long hi = lo;
  while (hi < kMStarSearchCap) {
    hi = std::min(hi * 2, kMStarSearchCap);
    if (!exceeds(hi)) break;
    lo = hi;
  }
  if (lo == kMStarSearchCap) return kMStarSearchCap;  // cap hit; see m_star
  // invariant: exceeds(lo) && !exceeds(hi)
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (exceeds(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

MStarResult m_star(Family family, int n_in, ExecPolicy policy) {
  if (n_in < 1) throw std::invalid_argument("m_star: need N >= 1");
  MStarResult res;
  res.family = family;
  res.n_in = n_in;
  res.search_cap = kMStarSearchCap;

  if (family == Family::universal) {
    if (sup_p(family, n_in, kInfiniteM, policy) > 1.0 + kExceedGuard) {
      res.kind = MStarResult::Kind::infinite;
      return res;
    }
  } else {
    // No closed M = infinity form: require sup_r p > 1 + margin with a
    // stable sign over three growing proxies.
    constexpr double kMargin = 1e-6;
    bool all = true;
    for (long m : {1L << 10, 1L << 12, 1L << 14})
      all = all && (sup_p(family, n_in, std::max(m, long(n_in) + 1), policy) >
                    1.0 + kMargin);
    if (all) {
      res.kind = MStarResult::Kind::infinite;
      res.infinite_by_proxy = true;
      return res;
    }
  }

  const auto found = largest_superbroadcasting_m(family, n_in, policy);
  if (!found) {
    res.kind = MStarResult::Kind::none;
  } else if (*found >= kMStarSearchCap) {
    // exceeded the search budget without the infinity criterion firing
    res.kind = MStarResult::Kind::infinite;
    res.infinite_by_proxy = true;
  } else {
    res.kind = MStarResult::Kind::finite;
    res.m_star = *found;
  }
  return res;
}

PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 5)
    throw std::invalid_argument("power_law_fit: need at least 5 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, y] : points) {
    if (n <= 0.0 || y <= 0.0)
      throw std::invalid_argument("power_law_fit: points must be positive");
    const double lx = std::log(n), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double count = double(points.size());
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / count;
  return PowerLawFit{slope, std::exp(intercept)};
}

}  // namespace superb::thresholds
