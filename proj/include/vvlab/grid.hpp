#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vvlab {

using Field = std::vector<double>;

/// Uniform periodic grid on [0, length). Node i sits at i*dx; the right
/// endpoint is identified with the left one.
struct Grid {
  double length = 1.0;
  std::size_t n = 0;

  Grid() = default;
  Grid(double L, std::size_t N) : length(L), n(N) {
    if (!(L > 0.0)) throw std::invalid_argument("Grid: length must be positive");
    if (N < 16) throw std::invalid_argument("Grid: at least 16 nodes required");
  }

  double dx() const { return length / static_cast<double>(n); }
  double x(std::size_t i) const { return dx() * static_cast<double>(i); }

  std::vector<double> nodes() const {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = x(i);
    return xs;
  }

  bool operator==(const Grid&) const = default;
};

}  // namespace vvlab
