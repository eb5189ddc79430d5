#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vvlab {

/// Least-squares power-law fit e = C * eps^slope on log-log data.
struct RateFit {
  std::string norm_id;
  std::vector<std::pair<double, double>> points;  // (epsilon, error)
  double slope = 0;
  double intercept = 0;  // ln C
  double residual = 0;   // RMS residual of the fit in log space
  int n_points = 0;
};

/// Requires at least 3 points with positive errors; throws otherwise.
RateFit fit_rate(const std::string& norm_id,
                 std::span<const std::pair<double, double>> pts);

}  // namespace vvlab
