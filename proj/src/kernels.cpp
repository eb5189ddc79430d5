#include "vvlab/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <cmath>

namespace vvlab::kernels {

namespace {
std::atomic<int> g_max_threads{1};
std::atomic<std::size_t> g_grain{1u << 14};
thread_local bool t_serial = false;
}  // namespace

void set_max_threads(int n) {
  if (n < 1) n = 1;
  g_max_threads.store(n);
  omp_set_num_threads(n);
}

int max_threads() { return g_max_threads.load(); }

void set_parallel_grain(std::size_t n) { g_grain.store(n); }

std::size_t parallel_grain() { return g_grain.load(); }

void set_thread_serial(bool serial) { t_serial = serial; }

bool thread_serial() { return t_serial; }

bool want_parallel(std::size_t n) {
  return !t_serial && g_max_threads.load() > 1 && n >= g_grain.load();
}

void apply_stencil_periodic(const double* x, double* y, std::size_t n,
                            const double* coeff, const int* offset, int m) {
  int lo_off = 0, hi_off = 0;
  for (int k = 0; k < m; ++k) {
    if (offset[k] < lo_off) lo_off = offset[k];
    if (offset[k] > hi_off) hi_off = offset[k];
  }
  const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
  const std::ptrdiff_t lo = -static_cast<std::ptrdiff_t>(lo_off);
  const std::ptrdiff_t hi = sn - static_cast<std::ptrdiff_t>(hi_off);

  // Wrapped edges first, then the unwrapped interior.
  auto wrapped = [&](std::ptrdiff_t i) {
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
      std::ptrdiff_t j = i + offset[k];
      if (j < 0) j += sn;
      if (j >= sn) j -= sn;
      acc += coeff[k] * (x[j] - x[i]);
    }
    y[i] = acc;
  };
  if (lo >= hi) {
    for (std::ptrdiff_t i = 0; i < sn; ++i) wrapped(i);
    return;
  }
  for (std::ptrdiff_t i = 0; i < lo; ++i) wrapped(i);
  for (std::ptrdiff_t i = hi; i < sn; ++i) wrapped(i);

#pragma omp parallel for schedule(static) if (want_parallel(n))
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    double acc = 0.0;
    for (int k = 0; k < m; ++k) acc += coeff[k] * (x[i + offset[k]] - x[i]);
    y[i] = acc;
  }
}

double sum(const double* x, std::size_t n) {
  return sum_indexed(n, [x](std::size_t i) { return x[i]; });
}

double max_abs(const double* x, std::size_t n) {
  return max_indexed(n, [x](std::size_t i) { return std::fabs(x[i]); });
}

bool all_finite(const double* x, std::size_t n) {
  if (n == 0) return true;
  const std::size_t nc = (n + kChunk - 1) / kChunk;
  std::vector<char> ok(nc, 1);
#pragma omp parallel for schedule(static) if (want_parallel(n))
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    for (std::size_t i = lo; i < hi; ++i) {
      if (!std::isfinite(x[i])) {
        ok[static_cast<std::size_t>(c)] = 0;
        break;
      }
    }
  }
  for (char v : ok)
    if (!v) return false;
  return true;
}

}  // namespace vvlab::kernels
