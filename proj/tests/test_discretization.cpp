#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "vvlab/fft.hpp"

#include "vvlab/norms.hpp"

using namespace vvlab;

namespace {
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

Field sampled(const Grid& g, double (*f)(double)) {
  Field out(g.n);
  for (std::size_t i = 0; i < g.n; ++i) out[i] = f(g.x(i));
  return out;
}
}  // namespace

TEST_CASE("grid basics and validation") {
  Grid g(2.0, 32);
  CHECK(g.dx() == doctest::Approx(0.0625));
  CHECK(g.x(16) == doctest::Approx(1.0));
  CHECK_THROWS_AS(Grid(1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(Grid(-1.0, 32), std::invalid_argument);
}

TEST_CASE("derivatives of constants vanish exactly") {
  Grid g(5.0, 64);
  Field c(g.n, 2.5);
  for (DiffKind kind : {DiffKind::FD2, DiffKind::FD4, DiffKind::Spectral}) {
    for (int k = 1; k <= 4; ++k) {
      Field d = deriv(g, c, k, {kind});
      CHECK(max_abs_diff(d, Field(g.n, 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("derivative order k > 4 is rejected") {
  Grid g(1.0, 32);
  Field f(g.n, 0.0);
  CHECK_THROWS_AS(deriv(g, f, 5, {DiffKind::FD4}), std::invalid_argument);
}

TEST_CASE("second derivative of sin at the advertised orders") {
  // Error against -sin must shrink at the operator's accuracy order.
  auto err_at = [](std::size_t n, DiffKind kind) {
    Grid g(2.0 * kPi, n);
    Field f = sampled(g, [](double x) { return std::sin(x); });
    Field d = deriv(g, f, 2, {kind});
    Field expect(g.n);
    for (std::size_t i = 0; i < g.n; ++i) expect[i] = -std::sin(g.x(i));
    return max_abs_diff(d, expect);
  };
  for (DiffKind kind : {DiffKind::FD2, DiffKind::FD4}) {
    const double e1 = err_at(64, kind);
    const double e2 = err_at(128, kind);
    const double order = std::log2(e1 / e2);
    const double expect = kind == DiffKind::FD2 ? 2.0 : 4.0;
    CHECK(std::fabs(order - expect) <= 0.2);
  }
}

TEST_CASE("first, third and fourth FD derivatives converge at their order") {
  auto err_at = [](std::size_t n, DiffKind kind, int k) {
    Grid g(2.0 * kPi, n);
    Field f = sampled(g, [](double x) { return std::sin(x); });
    Field d = deriv(g, f, k, {kind});
    Field expect(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      expect[i] = (k == 1) ? std::cos(x) : (k == 3 ? -std::cos(x) : std::sin(x));
    }
    return max_abs_diff(d, expect);
  };
  for (DiffKind kind : {DiffKind::FD2, DiffKind::FD4}) {
    for (int k : {1, 3, 4}) {
      const double e1 = err_at(64, kind, k);
      const double e2 = err_at(128, kind, k);
      const double order = std::log2(e1 / e2);
      const double expect = kind == DiffKind::FD2 ? 2.0 : 4.0;
      CHECK(std::fabs(order - expect) <= 0.3);
    }
  }
}

TEST_CASE("spectral fourth derivative of sin(3x) is 81 sin(3x)") {
  Grid g(2.0 * kPi, 64);
  Field f = sampled(g, [](double x) { return std::sin(3.0 * x); });
  Field d = deriv(g, f, 4, {DiffKind::Spectral});
  Field expect(g.n);
  for (std::size_t i = 0; i < g.n; ++i) expect[i] = 81.0 * f[i];
  CHECK(max_abs_diff(d, expect) <= 1e-10 * 81.0);
}

TEST_CASE("spectral derivative applied twice equals the second derivative") {
  Grid g(2.0 * kPi, 128);
  Field f = sampled(g, [](double x) { return std::sin(5.0 * x) + 0.7 * std::cos(2.0 * x); });
  Field once = deriv(g, deriv(g, f, 1, {DiffKind::Spectral}), 1, {DiffKind::Spectral});
  Field twice = deriv(g, f, 2, {DiffKind::Spectral});
  CHECK(max_abs_diff(once, twice) <= 1e-11);
}

TEST_CASE("derivatives commute with grid translation") {
  Grid g(2.0 * kPi, 128);
  Field f(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    f[i] = std::sin(2.0 * g.x(i)) + 0.25 * std::cos(5.0 * g.x(i));
  const std::size_t shift = 17;
  Field fs(g.n);
  for (std::size_t i = 0; i < g.n; ++i) fs[i] = f[(i + shift) % g.n];
  for (DiffKind kind : {DiffKind::FD2, DiffKind::FD4, DiffKind::Spectral}) {
    Field df = deriv(g, f, 1, {kind});
    Field dfs = deriv(g, fs, 1, {kind});
    Field df_shift(g.n);
    for (std::size_t i = 0; i < g.n; ++i) df_shift[i] = df[(i + shift) % g.n];
    CHECK(max_abs_diff(dfs, df_shift) <= 1e-11);
  }
}

TEST_CASE("deriv is linear") {
  Grid g(2.0 * kPi, 128);
  Field f(g.n), h(g.n), combo(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    f[i] = std::sin(4.0 * g.x(i));
    h[i] = std::cos(3.0 * g.x(i));
    combo[i] = 1.5 * f[i] + 2.5 * h[i];
  }
  for (DiffKind kind : {DiffKind::FD4, DiffKind::Spectral}) {
    Field df = deriv(g, f, 2, {kind});
    Field dh = deriv(g, h, 2, {kind});
    Field dc = deriv(g, combo, 2, {kind});
    Field lin(g.n);
    for (std::size_t i = 0; i < g.n; ++i) lin[i] = 1.5 * df[i] + 2.5 * dh[i];
    CHECK(max_abs_diff(dc, lin) <= 1e-10);
  }
}

TEST_CASE("quadrature of a constant is exact") {
  Grid g(3.0, 48);
  Field c(g.n, 1.25);
  CHECK(quadrature(g, c) == doctest::Approx(3.75).epsilon(1e-14));
}

TEST_CASE("norms of the zero field vanish for every spec") {
  Grid g(1.0, 32);
  Field z(g.n, 0.0);
  CHECK(norm(g, z, NormSpec::lp(2)) == 0.0);
  CHECK(norm(g, z, NormSpec::linf()) == 0.0);
  CHECK(norm(g, z, NormSpec::hs(3)) == 0.0);
  CHECK(norm(g, z, NormSpec::hs_frac(1.5)) == 0.0);
  CHECK(norm(g, z, NormSpec::dk(2)) == 0.0);
}

TEST_CASE("analytic norms of sin on [0, 2 pi)") {
  Grid g(2.0 * kPi, 256);
  Field f = sampled(g, [](double x) { return std::sin(x); });
  CHECK(norm(g, f, NormSpec::lp(2)) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
  CHECK(norm(g, f, NormSpec::hs(1)) ==
        doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("L2 norm of a constant is |c| sqrt(L)") {
  Grid g(4.0, 64);
  Field c(g.n, -2.0);
  CHECK(norm(g, c, NormSpec::lp(2)) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("fractional Sobolev norm matches integer orders on band-limited fields") {
  Grid g(2.0 * kPi, 128);
  Field f(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    f[i] = 0.8 * std::sin(x) - 0.4 * std::cos(3.0 * x) + 0.1 * std::sin(7.0 * x);
  }
  for (int s = 0; s <= 3; ++s) {
    const double frac = norm(g, f, NormSpec::hs_frac(static_cast<double>(s)));
    const double integer = norm(g, f, NormSpec::hs(s));
    CHECK(std::fabs(frac - integer) <= 1e-8 * integer);
  }
}

TEST_CASE("Dk norm equals the Lp norm of the k-th derivative") {
  Grid g(2.0 * kPi, 128);
  Field f = sampled(g, [](double x) { return std::sin(2.0 * x); });
  const double d2 = norm(g, f, NormSpec::dk(2));
  // d2/dx2 sin(2x) = -4 sin(2x), |.|_2 = 4 sqrt(pi).
  CHECK(d2 == doctest::Approx(4.0 * std::sqrt(kPi)).epsilon(1e-10));
}

TEST_CASE("real FFT: round trip and Parseval") {
  Grid g(2.0 * kPi, 96);  // not a power of two
  Field f(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    f[i] = 0.3 + std::sin(2.0 * g.x(i)) - 0.4 * std::cos(7.0 * g.x(i));
  auto spec = fft::rfft(f);
  Field back = fft::irfft(spec, g.n);
  CHECK(max_abs_diff(f, back) <= 1e-13);

  double phys = 0.0;
  for (double v : f) phys += v * v;
  double spectral = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const bool shared = k == 0 || (g.n % 2 == 0 && k + 1 == spec.size());
    spectral += (shared ? 1.0 : 2.0) * std::norm(spec[k]);
  }
  spectral /= static_cast<double>(g.n);
  CHECK(phys == doctest::Approx(spectral).epsilon(1e-13));
}

TEST_CASE("sobolev multiplier: geometric form and limits") {
  CHECK(sobolev_multiplier(2.0, 0.0) == doctest::Approx(1.0));
  CHECK(sobolev_multiplier(2.0, 1.0) == doctest::Approx(3.0));
  CHECK(sobolev_multiplier(3.0, 2.0) == doctest::Approx(1.0 + 4.0 + 16.0 + 64.0));
  CHECK(sobolev_multiplier(1.5, 1.0) == doctest::Approx(2.5));
}
