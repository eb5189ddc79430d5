#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vvlab::kernels {

/// Reduction chunk length. Reductions accumulate fixed-size chunk partials
/// and combine them in index order, so the result is bitwise independent of
/// the number of threads.
inline constexpr std::size_t kChunk = 4096;

/// Global thread budget for the OpenMP kernels (also applied to the OpenMP
/// runtime). 1 disables parallel execution.
void set_max_threads(int n);
int max_threads();

/// Arrays shorter than the grain are always processed serially.
void set_parallel_grain(std::size_t n);
std::size_t parallel_grain();

/// Per-thread override: force serial kernels on the calling thread. Used by
/// sweep workers, which parallelize over runs instead of over grid nodes.
void set_thread_serial(bool serial);
bool thread_serial();

bool want_parallel(std::size_t n);

/// Derivative-stencil application in deviation form:
///   y[i] = sum_m coeff[m] * (x[(i + offset[m]) mod n] - x[i]).
/// Identical to the plain weighted sum whenever the coefficients sum to
/// zero (every derivative stencil), and exact on constant inputs.
void apply_stencil_periodic(const double* x, double* y, std::size_t n,
                            const double* coeff, const int* offset, int m);

double sum(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
bool all_finite(const double* x, std::size_t n);

/// Deterministic chunked sum of f(i) for i in [0, n).
template <class F>
double sum_indexed(std::size_t n, F&& f) {
  if (n == 0) return 0.0;
  const std::size_t nc = (n + kChunk - 1) / kChunk;
  std::vector<double> part(nc);
#pragma omp parallel for schedule(static) if (want_parallel(n))
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += f(i);
    part[static_cast<std::size_t>(c)] = acc;
  }
  double total = 0.0;
  for (double v : part) total += v;
  return total;
}

template <class F>
double max_indexed(std::size_t n, F&& f) {
  if (n == 0) return 0.0;
  const std::size_t nc = (n + kChunk - 1) / kChunk;
  std::vector<double> part(nc);
#pragma omp parallel for schedule(static) if (want_parallel(n))
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    double m = f(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double v = f(i);
      if (v > m) m = v;
    }
    part[static_cast<std::size_t>(c)] = m;
  }
  double m = part[0];
  for (double v : part)
    if (v > m) m = v;
  return m;
}

/// Elementwise map: y[i] = f(i) for i in [0, n).
template <class F>
void map_indexed(std::size_t n, double* y, F&& f) {
#pragma omp parallel for schedule(static) if (want_parallel(n))
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    y[i] = f(static_cast<std::size_t>(i));
}

}  // namespace vvlab::kernels
