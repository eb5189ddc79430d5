#include "vvlab/rate_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace vvlab {

RateFit fit_rate(const std::string& norm_id,
                 std::span<const std::pair<double, double>> pts) {
  if (pts.size() < 3) throw std::invalid_argument("fit_rate: need at least 3 points");
  for (const auto& [e, v] : pts) {
    if (!(e > 0.0)) throw std::invalid_argument("fit_rate: epsilon values must be positive");
    if (!(v > 0.0)) throw std::invalid_argument("fit_rate: error values must be positive");
  }
  RateFit f;
  f.norm_id = norm_id;
  f.points.assign(pts.begin(), pts.end());
  f.n_points = static_cast<int>(pts.size());

  const double n = static_cast<double>(pts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [e, v] : pts) {
    const double x = std::log(e);
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;

  double rss = 0;
  for (const auto& [e, v] : pts) {
    const double r = std::log(v) - (f.intercept + f.slope * std::log(e));
    rss += r * r;
  }
  f.residual = std::sqrt(rss / n);
  return f;
}

}  // namespace vvlab
