#include "vvlab/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vvlab {

InitialData InitialData::named(const std::string& name) {
  InitialData d;
  if (name == "bump") {
    d.kind = Kind::Bump;
  } else if (name == "gauss") {
    d.kind = Kind::Gauss;
  } else if (name == "acoustic") {
    d.kind = Kind::Acoustic;
  } else if (name == "zero") {
    d.kind = Kind::Zero;
  } else {
    throw std::invalid_argument("unknown initial data generator: " + name);
  }
  return d;
}

namespace {

double bump_profile(double x, double center, double radius, int power, double L) {
  // Nearest periodic image.
  double s = x - center;
  if (s > 0.5 * L) s -= L;
  if (s < -0.5 * L) s += L;
  s /= radius;
  const double b = 1.0 - s * s;
  if (b <= 0.0) return 0.0;
  double v = 1.0;
  for (int k = 0; k < power; ++k) v *= b;
  return v;
}

}  // namespace

SymState build_initial(const Grid& g, const PhysParams& p, const InitialData& d) {
  SymState w(g);
  const double e_dg = (p.delta - 1.0) / (p.gamma - 1.0);
  switch (d.kind) {
    case InitialData::Kind::Bump:
      for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        w.phi[i] = d.amp * bump_profile(x, d.center, d.radius, d.power, g.length);
        w.vphi[i] = std::pow(w.phi[i], e_dg);
        w.u[i] = d.u_amp * bump_profile(x, d.u_center, d.u_radius, d.u_power, g.length);
      }
      break;
    case InitialData::Kind::Gauss:
      for (std::size_t i = 0; i < g.n; ++i) {
        double s = g.x(i) - d.center;
        if (s > 0.5 * g.length) s -= g.length;
        if (s < -0.5 * g.length) s += g.length;
        const double rho = d.base + d.amp * std::exp(-(s * s) / (d.width * d.width));
        w.phi[i] = std::pow(rho, p.half_gamma());
        w.vphi[i] = std::pow(rho, p.half_delta());
        w.u[i] = d.u_amp * bump_profile(g.x(i), d.u_center, d.u_radius, d.u_power, g.length);
      }
      break;
    case InitialData::Kind::Acoustic:
      for (std::size_t i = 0; i < g.n; ++i) {
        const double ph = 2.0 * std::numbers::pi * d.mode * g.x(i) / g.length;
        w.phi[i] = d.phibar + d.pert * std::sin(ph);
        w.vphi[i] = std::pow(w.phi[i], e_dg);
        w.u[i] = 0.0;
      }
      break;
    case InitialData::Kind::Zero:
      break;
  }
  return w;
}

}  // namespace vvlab
