#include "vvlab/state.hpp"

#include <cmath>

namespace vvlab {

SymState to_symmetric(const PrimState& s, const PhysParams& p) {
  require_valid(p);
  for (std::size_t i = 0; i < s.rho.size(); ++i)
    if (s.rho[i] < 0.0) throw NegativeDensityError(i);
  SymState w(s.grid);
  const double ed = p.half_delta();
  const double eg = p.half_gamma();
  for (std::size_t i = 0; i < s.rho.size(); ++i) {
    w.vphi[i] = std::pow(s.rho[i], ed);
    w.phi[i] = std::pow(s.rho[i], eg);
  }
  w.u = s.u;
  return w;
}

PrimState to_primitive(const SymState& w, const PhysParams& p) {
  PrimState s;
  s.grid = w.grid;
  s.rho.resize(w.phi.size());
  const double e = 2.0 / (p.gamma - 1.0);
  for (std::size_t i = 0; i < w.phi.size(); ++i) s.rho[i] = std::pow(w.phi[i], e);
  s.u = w.u;
  return s;
}

Field pressure(const Grid&, const Field& rho, const PhysParams& p) {
  Field out(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) out[i] = p.A * std::pow(rho[i], p.gamma);
  return out;
}

std::pair<Field, Field> viscosities(const Grid&, const Field& rho, const PhysParams& p) {
  Field mu(rho.size()), lambda(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double rd = std::pow(rho[i], p.delta);
    mu[i] = p.epsilon * p.alpha * rd;
    lambda[i] = p.epsilon * p.beta * rd;
  }
  return {std::move(mu), std::move(lambda)};
}

Field sound_speed(const SymState& w, const PhysParams& p) {
  const double c0 = std::sqrt(p.A * p.gamma);
  Field out(w.phi.size());
  for (std::size_t i = 0; i < w.phi.size(); ++i) out[i] = c0 * w.phi[i];
  return out;
}

bool check_sym_invariants(const SymState& w, const PhysParams& p, double rel_tol,
                          std::string* why, double neg_tol) {
  const double e = (p.delta - 1.0) / (p.gamma - 1.0);
  double phimax = 0.0;
  for (double v : w.phi) phimax = std::max(phimax, std::fabs(v));
  const double floor = 1e-10 * phimax;
  for (std::size_t i = 0; i < w.phi.size(); ++i) {
    if (w.vphi[i] < -neg_tol || w.phi[i] < -neg_tol) {
      if (why) *why = "negative density power at node " + std::to_string(i);
      return false;
    }
    if (w.phi[i] > floor) {
      const double expect = std::pow(w.phi[i], e);
      const double denom = std::max(expect, 1e-300);
      if (std::fabs(w.vphi[i] - expect) / denom > rel_tol) {
        if (why) *why = "vphi/phi power consistency fails at node " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

}  // namespace vvlab
