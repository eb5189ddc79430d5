#include "vvlab/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "vvlab/norms.hpp"

namespace vvlab {

namespace {

constexpr double kSkip = 1e-13;

double gauss(std::mt19937_64& rng) {
  // Explicit Box-Muller keeps the draw identical across standard libraries.
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double u1 = uni(rng);
  double u2 = uni(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void push_ratio(RatioReport& r, double lhs, double rhs) {
  if (rhs < kSkip) {
    ++r.skipped;
    return;
  }
  const double q = lhs / rhs;
  r.ratios.push_back(q);
  if (q > r.max_ratio) r.max_ratio = q;
}

}  // namespace

Field random_band_limited(const Grid& g, std::size_t max_mode, std::uint64_t seed,
                          bool zero_mean) {
  std::mt19937_64 rng(seed);
  std::vector<double> ac(max_mode + 1, 0.0), as(max_mode + 1, 0.0);
  if (!zero_mean) ac[0] = gauss(rng);
  for (std::size_t k = 1; k <= max_mode; ++k) {
    const double decay = 1.0 / (1.0 + static_cast<double>(k));
    ac[k] = decay * gauss(rng);
    as[k] = decay * gauss(rng);
  }
  Field f(g.n, ac[0]);
  const double base = 2.0 * std::numbers::pi / g.length;
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    double acc = f[i];
    for (std::size_t k = 1; k <= max_mode; ++k) {
      const double ph = base * static_cast<double>(k) * x;
      acc += ac[k] * std::cos(ph) + as[k] * std::sin(ph);
    }
    f[i] = acc;
  }
  return f;
}

RatioReport check_gn(const Grid& g, std::span<const Field> samples) {
  RatioReport r;
  const DiffOp sp{DiffKind::Spectral};
  const double ps[] = {4.0, 6.0, std::numeric_limits<double>::infinity()};
  for (const Field& f : samples) {
    const double l2 = l2_norm(g, f);
    const double d2 = norm(g, f, NormSpec::dk(1, 2.0), sp);
    for (double p : ps) {
      const double theta = std::isinf(p) ? 0.5 : 0.5 - 1.0 / p;
      const double lhs = lp_norm(g, f, p);
      const double rhs = std::pow(l2, 1.0 - theta) * std::pow(d2, theta);
      push_ratio(r, lhs, rhs);
    }
  }
  return r;
}

RatioReport check_moser(const Grid& g, std::span<const Field> fs,
                        std::span<const Field> gsamples, int s) {
  if (s < 1 || s > 3) throw std::invalid_argument("check_moser: s must be in [1, 3]");
  RatioReport r;
  const DiffOp sp{DiffKind::Spectral};
  const std::size_t m = std::min(fs.size(), gsamples.size());
  Field prod(g.n), lhsf(g.n);
  for (std::size_t i = 0; i < m; ++i) {
    const Field& f = fs[i];
    const Field& h = gsamples[i];
    for (std::size_t j = 0; j < g.n; ++j) prod[j] = f[j] * h[j];
    const Field ds_prod = deriv(g, prod, s, sp);
    const Field ds_h = deriv(g, h, s, sp);
    for (std::size_t j = 0; j < g.n; ++j) lhsf[j] = ds_prod[j] - f[j] * ds_h[j];
    const double lhs = l2_norm(g, lhsf);
    const double df_inf = lp_norm(g, deriv(g, f, 1, sp), std::numeric_limits<double>::infinity());
    const double dsm1_h = l2_norm(g, deriv(g, h, s - 1, sp));
    const double ds_f = l2_norm(g, deriv(g, f, s, sp));
    const double h_inf = lp_norm(g, h, std::numeric_limits<double>::infinity());
    push_ratio(r, lhs, df_inf * dsm1_h + ds_f * h_inf);
  }
  return r;
}

RatioReport check_interp(const Grid& g, std::span<const Field> samples,
                         double s_frac, int s) {
  if (s < 1 || s > 3) throw std::invalid_argument("check_interp: s must be in [1, 3]");
  if (s_frac < 0.0 || s_frac > static_cast<double>(s))
    throw std::invalid_argument("check_interp: s' must lie in [0, s]");
  RatioReport r;
  const double theta = s_frac / static_cast<double>(s);
  for (const Field& f : samples) {
    const double lhs = norm(g, f, NormSpec::hs_frac(s_frac));
    const double n0 = l2_norm(g, f);
    const double ns = norm(g, f, NormSpec::hs(s));
    push_ratio(r, lhs, std::pow(n0, 1.0 - theta) * std::pow(ns, theta));
  }
  return r;
}

}  // namespace vvlab
