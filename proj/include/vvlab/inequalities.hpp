#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vvlab/grid.hpp"

namespace vvlab {

/// Empirical constants of a discrete inequality: per-sample ratios
/// lhs / rhs-without-constant. Samples whose rhs is below the skip
/// threshold are dropped (0/0 cases).
struct RatioReport {
  std::vector<double> ratios;
  double max_ratio = 0.0;
  std::size_t skipped = 0;
  bool empty() const { return ratios.empty(); }
};

/// Band-limited random field: sum over modes 1..max_mode of gaussian
/// sine/cosine coefficients with mild spectral decay. The coefficient draw
/// depends only on the seed and mode index, never on the grid, so the same
/// seed sampled on a refined grid gives the same continuum function.
Field random_band_limited(const Grid& g, std::size_t max_mode, std::uint64_t seed,
                          bool zero_mean = true);

/// Gagliardo-Nirenberg ratios |f|_p / (|f|_2^(1-t) |f'|_2^t), t = 1/2 - 1/p,
/// for p in {4, 6, inf} (1D scaling). Fields should be zero-mean.
RatioReport check_gn(const Grid& g, std::span<const Field> samples);

/// Commutator ratios |d^s(fg) - f d^s g|_2 / (|f'|_inf |d^(s-1)g|_2 +
/// |d^s f|_2 |g|_inf), 1 <= s <= 3.
RatioReport check_moser(const Grid& g, std::span<const Field> f,
                        std::span<const Field> gsamples, int s);

/// Interpolation ratios ||f||_{s'} / (||f||_0^(1-s'/s) ||f||_s^(s'/s)).
/// Exact (ratio 1) at the endpoints s' = 0 and s' = s.
RatioReport check_interp(const Grid& g, std::span<const Field> samples,
                         double s_frac, int s = 3);

}  // namespace vvlab
