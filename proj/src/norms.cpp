#include "vvlab/norms.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "vvlab/fft.hpp"
#include "vvlab/kernels.hpp"

namespace vvlab {

double quadrature(const Grid& g, const Field& f) {
  return g.dx() * kernels::sum(f.data(), f.size());
}

double lp_norm(const Grid& g, const Field& f, double p) {
  if (std::isinf(p)) return kernels::max_abs(f.data(), f.size());
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const double* x = f.data();
  double s;
  if (p == 2.0) {
    s = kernels::sum_indexed(f.size(), [x](std::size_t i) { return x[i] * x[i]; });
  } else {
    s = kernels::sum_indexed(f.size(),
                             [x, p](std::size_t i) { return std::pow(std::fabs(x[i]), p); });
  }
  return std::pow(g.dx() * s, 1.0 / p);
}

double l2_norm(const Grid& g, const Field& f) { return lp_norm(g, f, 2.0); }

double sobolev_multiplier(double s, double kappa) {
  const double q = kappa * kappa;
  if (std::fabs(q - 1.0) < 1e-9) {
    // Limit of the geometric sum at q -> 1 with first-order correction.
    return (s + 1.0) * (1.0 + 0.5 * s * (q - 1.0));
  }
  return (std::pow(q, s + 1.0) - 1.0) / (q - 1.0);
}

namespace {

double sobolev_frac(const Grid& g, const Field& f, double s) {
  const std::size_t n = g.n;
  auto spec = fft::rfft(f);
  const double base = 2.0 * std::numbers::pi / g.length;
  const std::size_t kmax = spec.size() - 1;
  double acc = 0.0;
  for (std::size_t j = 0; j <= kmax; ++j) {
    // One-sided spectrum: interior modes carry their conjugate twins.
    const bool shared = (j == 0) || (n % 2 == 0 && j == kmax);
    const double w = shared ? 1.0 : 2.0;
    const double kappa = base * static_cast<double>(j);
    acc += w * sobolev_multiplier(s, kappa) * std::norm(spec[j]);
  }
  return std::sqrt(acc * g.length / (static_cast<double>(n) * static_cast<double>(n)));
}

}  // namespace

double norm(const Grid& g, const Field& f, const NormSpec& spec, DiffOp op) {
  if (f.size() != g.n) throw std::invalid_argument("norm: field/grid size mismatch");
  switch (spec.kind) {
    case NormSpec::Kind::Lp:
      return lp_norm(g, f, spec.p);
    case NormSpec::Kind::SobolevInt: {
      if (spec.s < 0 || spec.s > 3)
        throw std::invalid_argument("norm: integer Sobolev order must be in [0, 3]");
      double acc = 0.0;
      Field d;
      for (int j = 0; j <= spec.s; ++j) {
        if (j == 0) {
          const double v = l2_norm(g, f);
          acc += v * v;
        } else {
          deriv(g, f, j, op, d);
          const double v = l2_norm(g, d);
          acc += v * v;
        }
      }
      return std::sqrt(acc);
    }
    case NormSpec::Kind::SobolevFrac:
      if (spec.s_frac < 0.0 || spec.s_frac > 3.0)
        throw std::invalid_argument("norm: fractional Sobolev order must be in [0, 3]");
      return sobolev_frac(g, f, spec.s_frac);
    case NormSpec::Kind::HomogeneousK: {
      Field d = deriv(g, f, spec.k, op);
      return lp_norm(g, d, spec.p);
    }
  }
  throw std::logic_error("norm: unreachable");
}

}  // namespace vvlab
