#pragma once

#include <cmath>
#include <cstddef>

// Naive serial reference kernels. Kept deliberately independent of the
// OpenMP implementations in kernels.cpp so the tests and the benchmark can
// compare the two paths.

namespace vvlab::ref {

inline void apply_stencil_periodic(const double* x, double* y, std::size_t n,
                                   const double* coeff, const int* offset, int m) {
  const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
      std::ptrdiff_t j = (i + offset[k]) % sn;
      if (j < 0) j += sn;
      acc += coeff[k] * (x[j] - x[i]);
    }
    y[i] = acc;
  }
}

/// Chunked exactly like kernels::sum so the two agree bitwise.
inline double sum(const double* x, std::size_t n, std::size_t chunk = 4096) {
  double total = 0.0;
  for (std::size_t lo = 0; lo < n; lo += chunk) {
    const std::size_t hi = lo + chunk < n ? lo + chunk : n;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i];
    total += acc;
  }
  return total;
}

inline double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

}  // namespace vvlab::ref
