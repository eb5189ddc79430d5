#include "vvlab/rhs.hpp"

#include <stdexcept>

#include "vvlab/kernels.hpp"

namespace vvlab {

Field rhs_transport_vphi(const Grid& g, const Field& f, const Field& advector,
                         const Field& divider, const PhysParams& p, const DiffOps& ops) {
  const Field df = deriv(g, f, 1, ops.advect);
  const Field dv = deriv(g, advector, 1, ops.advect);
  const double c = p.half_delta();
  Field out(g.n);
  const double* a = advector.data();
  const double* w = divider.data();
  const double* dfp = df.data();
  const double* dvp = dv.data();
  kernels::map_indexed(g.n, out.data(), [=](std::size_t i) {
    return -a[i] * dfp[i] - c * w[i] * dvp[i];
  });
  return out;
}

void eval_rhs(const Grid& g, const PhysParams& p, Mode mode, double eta,
              const SymState& state, const SymState* frozen, const DiffOps& ops,
              const Forcing* forcing, double t, SymRhs& out, bool include_viscous) {
  const std::size_t n = g.n;
  out.resize(n);
  if (mode == Mode::Linearized && frozen == nullptr)
    throw std::invalid_argument("eval_rhs: linearized mode needs frozen coefficients");
  const bool lin = mode == Mode::Linearized;
  const bool viscous = mode != Mode::Euler;

  // Coefficient fields: advector a, pressure coefficient psi, stress argument q_arg.
  const Field& a_field = lin ? frozen->u : state.u;
  const Field& psi_field = lin ? frozen->phi : state.phi;
  const Field& omega_field = lin ? frozen->vphi : state.vphi;

  const Field d_phi = deriv(g, state.phi, 1, ops.advect);
  const Field d_u = deriv(g, state.u, 1, ops.advect);
  const Field d_vphi = deriv(g, state.vphi, 1, ops.advect);
  Field d_a;  // derivative of the advector (equals d_u in the self-coupled modes)
  if (lin) d_a = deriv(g, a_field, 1, ops.advect);
  const Field& d_adv = lin ? d_a : d_u;

  const double cdelta = p.half_delta();
  const double cgamma = p.half_gamma();
  const double pcoef = p.pressure_coeff();

  const double* a = a_field.data();
  const double* psi = psi_field.data();
  const double* omega = omega_field.data();
  const double* dphi = d_phi.data();
  const double* du = d_u.data();
  const double* dvphi = d_vphi.data();
  const double* dadv = d_adv.data();
  const double* vphi = state.vphi.data();

  // Transport of vphi: frozen advector and divider in linearized mode.
  kernels::map_indexed(n, out.dvphi.data(), [=](std::size_t i) {
    return -a[i] * dvphi[i] - cdelta * omega[i] * dadv[i];
  });
  // First row of the symmetric block.
  kernels::map_indexed(n, out.dphi.data(), [=](std::size_t i) {
    return -a[i] * dphi[i] - cgamma * psi[i] * du[i];
  });
  // Velocity row: advection + pressure gradient.
  kernels::map_indexed(n, out.du.data(), [=](std::size_t i) {
    return -a[i] * du[i] - pcoef * psi[i] * dphi[i];
  });

  if (viscous) {
    const double nu = p.lame_coeff();
    const double eps = p.epsilon;
    const double e2 = (mode == Mode::NS) ? 0.0 : eta * eta;
    // Source: epsilon * d/dx(vphi^2) * Q(stress argument); always explicit.
    Field vphi_sq(n);
    kernels::map_indexed(n, vphi_sq.data(), [=](std::size_t i) { return vphi[i] * vphi[i]; });
    const Field d_vphi_sq = deriv(g, vphi_sq, 1, ops.advect);
    const double* dvsq = d_vphi_sq.data();
    const double qnu = p.q_factor() * nu;
    const double* stress_arg = lin ? dadv : du;
    double* du_out = out.du.data();
    kernels::map_indexed(n, du_out, [=](std::size_t i) {
      return du_out[i] + eps * qnu * dvsq[i] * stress_arg[i];
    });
    if (include_viscous) {
      const Field d2u = deriv(g, state.u, 2, ops.viscous);
      const double* d2 = d2u.data();
      kernels::map_indexed(n, du_out, [=](std::size_t i) {
        return du_out[i] + eps * nu * (vphi[i] * vphi[i] + e2) * d2[i];
      });
    }
  }

  if (forcing) {
    Field gv(n, 0.0), gp(n, 0.0), gu(n, 0.0);
    forcing->eval(t, g, gv, gp, gu);
    for (std::size_t i = 0; i < n; ++i) {
      out.dvphi[i] += gv[i];
      out.dphi[i] += gp[i];
      out.du[i] += gu[i];
    }
  }
}

std::pair<Field, Field> rhs_symmetric_W(const Grid& g, const SymState& state,
                                        const SymState* frozen, const PhysParams& p,
                                        Mode mode, double eta, const DiffOps& ops) {
  SymRhs r;
  eval_rhs(g, p, mode, eta, state, frozen, ops, nullptr, 0.0, r);
  return {std::move(r.dphi), std::move(r.du)};
}

}  // namespace vvlab
