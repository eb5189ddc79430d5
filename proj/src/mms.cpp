#include "vvlab/mms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vvlab {

MmsSolution::MmsSolution(const PhysParams& p, double phi_bar, double a_phi, double c_phi,
                         double a_u, double c_u, int mode)
    : p_(p), phi_bar_(phi_bar), a_phi_(a_phi), c_phi_(c_phi), a_u_(a_u), c_u_(c_u),
      mode_(mode) {
  require_valid(p);
  if (p.gamma != p.delta)
    throw std::invalid_argument("MmsSolution: requires gamma == delta");
  if (!(phi_bar - std::fabs(a_phi) > 0.0))
    throw std::invalid_argument("MmsSolution: density must stay positive");
}

SymState MmsSolution::exact(double t, const Grid& g) const {
  SymState w(g);
  const double om = 2.0 * std::numbers::pi * mode_ / g.length;
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    w.phi[i] = phi_bar_ + a_phi_ * std::sin(om * (x - c_phi_ * t));
    w.vphi[i] = w.phi[i];  // gamma == delta
    w.u[i] = a_u_ * std::sin(om * (x - c_u_ * t));
  }
  return w;
}

void MmsSolution::eval(double t, const Grid& g, Field& g_vphi, Field& g_phi,
                       Field& g_u) const {
  const double om = 2.0 * std::numbers::pi * mode_ / g.length;
  const double cg = p_.half_gamma();
  const double cd = p_.half_delta();
  const double pc = p_.pressure_coeff();
  const double nu = p_.lame_coeff();
  const double eps = p_.epsilon;
  const double q = p_.q_factor();
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    const double sp = std::sin(om * (x - c_phi_ * t));
    const double cp = std::cos(om * (x - c_phi_ * t));
    const double su = std::sin(om * (x - c_u_ * t));
    const double cu = std::cos(om * (x - c_u_ * t));

    const double phi = phi_bar_ + a_phi_ * sp;
    const double u = a_u_ * su;
    const double phi_t = -a_phi_ * om * c_phi_ * cp;
    const double phi_x = a_phi_ * om * cp;
    const double u_t = -a_u_ * om * c_u_ * cu;
    const double u_x = a_u_ * om * cu;
    const double u_xx = -a_u_ * om * om * su;
    const double vsq_x = 2.0 * phi * phi_x;  // (vphi^2)_x with vphi = phi

    // Transport and first-row residual operators applied to the exact fields.
    g_phi[i] = phi_t + u * phi_x + cg * phi * u_x;
    g_vphi[i] = phi_t + u * phi_x + cd * phi * u_x;
    g_u[i] = u_t + u * u_x + pc * phi * phi_x - eps * nu * phi * phi * u_xx -
             eps * q * nu * vsq_x * u_x;
  }
}

PrimForcing MmsSolution::primitive_forcing() const {
  const PhysParams p = p_;
  const double phi_bar = phi_bar_, a_phi = a_phi_, c_phi = c_phi_;
  const double a_u = a_u_, c_u = c_u_;
  const int mode = mode_;
  MmsSolution self = *this;
  return [p, phi_bar, a_phi, c_phi, a_u, c_u, mode, self](
             double t, const Grid& g, Field& f_mass, Field& f_mom) {
    Field gv(g.n), gp(g.n), gu(g.n);
    self.eval(t, g, gv, gp, gu);
    const double om = 2.0 * std::numbers::pi * mode / g.length;
    const double drho_dphi_exp = (3.0 - p.gamma) / (p.gamma - 1.0);
    for (std::size_t i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      const double phi = phi_bar + a_phi * std::sin(om * (x - c_phi * t));
      const double u = a_u * std::sin(om * (x - c_u * t));
      const double rho = std::pow(phi, 2.0 / (p.gamma - 1.0));
      const double drho_dphi = 2.0 / (p.gamma - 1.0) * std::pow(phi, drho_dphi_exp);
      f_mass[i] = drho_dphi * gp[i];
      f_mom[i] = rho * gu[i] + u * f_mass[i];
    }
  };
}

}  // namespace vvlab
