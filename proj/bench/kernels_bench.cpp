// Timing comparison of the OpenMP kernels against the serial reference
// implementations, plus the full right-hand-side evaluation at both thread
// settings. Build and run:  ./bench_kernels [max_threads]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "vvlab/kernels.hpp"
#include "vvlab/reference.hpp"
#include "vvlab/rhs.hpp"

using namespace vvlab;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(int reps, const std::function<void()>& fn) {
  fn();  // warm up
  const auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

std::vector<double> random_vec(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = uni(rng);
  return v;
}

void row(const char* name, std::size_t n, double serial_ms, double par_ms) {
  std::printf("%-14s %9zu %12.4f %12.4f %8.2fx\n", name, n, serial_ms, par_ms,
              serial_ms / par_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : 2;
  kernels::set_max_threads(threads);
  kernels::set_parallel_grain(1);  // always take the parallel path

  std::printf("kernel              n    serial_ms      omp_ms   speedup   (threads=%d)\n",
              threads);

  const double c[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
  const int off[5] = {-2, -1, 0, 1, 2};

  for (std::size_t n : {std::size_t(1) << 12, std::size_t(1) << 16, std::size_t(1) << 20}) {
    auto x = random_vec(n, 42);
    std::vector<double> y(n);
    const int reps = n >= (1u << 20) ? 20 : 200;

    const double s1 = time_ms(reps, [&] {
      ref::apply_stencil_periodic(x.data(), y.data(), n, c, off, 5);
    });
    const double p1 = time_ms(reps, [&] {
      kernels::apply_stencil_periodic(x.data(), y.data(), n, c, off, 5);
    });
    row("fd4_stencil", n, s1, p1);

    volatile double sink = 0;
    const double s2 = time_ms(reps, [&] { sink = ref::sum(x.data(), n); });
    const double p2 = time_ms(reps, [&] { sink = kernels::sum(x.data(), n); });
    row("sum", n, s2, p2);

    const double s3 = time_ms(reps, [&] { sink = ref::max_abs(x.data(), n); });
    const double p3 = time_ms(reps, [&] { sink = kernels::max_abs(x.data(), n); });
    row("max_abs", n, s3, p3);
    (void)sink;
  }

  // Full right-hand side on a smooth positive state.
  for (std::size_t n : {std::size_t(1) << 12, std::size_t(1) << 16, std::size_t(1) << 20}) {
    Grid g(1.0, n);
    PhysParams p;
    p.epsilon = 0.5;
    SymState s(g);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = 2.0 * 3.14159265358979 * g.x(i);
      s.phi[i] = 1.5 + 0.2 * std::sin(x);
      s.vphi[i] = s.phi[i];
      s.u[i] = 0.3 * std::cos(x);
    }
    DiffOps ops;
    SymRhs out(n);
    const int reps = n >= (1u << 20) ? 10 : 100;

    kernels::set_thread_serial(true);
    const double sr = time_ms(reps, [&] {
      eval_rhs(g, p, Mode::NS, 0.0, s, nullptr, ops, nullptr, 0.0, out);
    });
    kernels::set_thread_serial(false);
    const double pr = time_ms(reps, [&] {
      eval_rhs(g, p, Mode::NS, 0.0, s, nullptr, ops, nullptr, 0.0, out);
    });
    row("ns_rhs", n, sr, pr);
  }
  return 0;
}
