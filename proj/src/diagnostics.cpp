#include "vvlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vvlab/kernels.hpp"
#include "vvlab/norms.hpp"
#include "vvlab/sym_system.hpp"

namespace vvlab {

namespace {
const DiffOp kSpectral{DiffKind::Spectral};

double sq(double x) { return x * x; }

Field mapped_rho(const SymState& w, const PhysParams& p) {
  const double e = 2.0 / (p.gamma - 1.0);
  Field rho(w.phi.size());
  for (std::size_t i = 0; i < rho.size(); ++i)
    rho[i] = std::pow(std::fabs(w.phi[i]), e);
  return rho;
}
}  // namespace

double apriori_state_value(const SymState& w, const PhysParams& p) {
  const Grid& g = w.grid;
  const double phi_h3 = norm(g, w.phi, NormSpec::hs(3), kSpectral);
  const double vphi_h2 = norm(g, w.vphi, NormSpec::hs(2), kSpectral);
  const double vphi_d3 = norm(g, w.vphi, NormSpec::dk(3), kSpectral);
  const double u_h2 = norm(g, w.u, NormSpec::hs(2), kSpectral);
  const double u_d3 = norm(g, w.u, NormSpec::dk(3), kSpectral);
  return sq(phi_h3) + sq(vphi_h2) + p.epsilon * sq(vphi_d3) + sq(u_h2) + sq(u_d3);
}

double apriori_dissipation_rate(const SymState& w, const PhysParams& p) {
  const Grid& g = w.grid;
  Field d4 = deriv(g, w.u, 4, kSpectral);
  for (std::size_t i = 0; i < d4.size(); ++i) d4[i] *= w.vphi[i];
  return p.epsilon * sq(l2_norm(g, d4));
}

std::vector<AprioriRecord> apriori_series(const Trajectory& traj, const PhysParams& p) {
  std::vector<AprioriRecord> out;
  out.reserve(traj.frames.size());
  double integral = 0.0;
  double rate_prev = 0.0;
  for (std::size_t j = 0; j < traj.frames.size(); ++j) {
    const Frame& f = traj.frames[j];
    const Grid& g = f.state.grid;
    AprioriRecord r;
    r.t = f.t;
    r.phi_h3_sq = sq(norm(g, f.state.phi, NormSpec::hs(3), kSpectral));
    r.vphi_h2_sq = sq(norm(g, f.state.vphi, NormSpec::hs(2), kSpectral));
    r.eps_vphi_d3_sq = p.epsilon * sq(norm(g, f.state.vphi, NormSpec::dk(3), kSpectral));
    r.u_h2_sq = sq(norm(g, f.state.u, NormSpec::hs(2), kSpectral));
    r.u_d3_sq = sq(norm(g, f.state.u, NormSpec::dk(3), kSpectral));
    const double rate = apriori_dissipation_rate(f.state, p);
    if (j > 0) integral += 0.5 * (f.t - traj.frames[j - 1].t) * (rate_prev + rate);
    rate_prev = rate;
    r.time_integral = integral;
    r.total = r.phi_h3_sq + r.vphi_h2_sq + r.eps_vphi_d3_sq + r.u_h2_sq + r.u_d3_sq +
              r.time_integral;
    out.push_back(r);
  }
  return out;
}

double apriori_sup(const std::vector<AprioriRecord>& series) {
  double s = 0.0;
  for (const auto& r : series) s = std::max(s, r.total);
  return s;
}

EnergyTerms energy_terms(const SymState& w, const PhysParams& p, double eta,
                         const DiffOps& ops, Mode mode) {
  const Grid& g = w.grid;
  const std::size_t n = g.n;
  const double a1 = coeff_a1(p);
  const double nu = p.lame_coeff();
  const double eps = mode == Mode::Euler ? 0.0 : p.epsilon;
  const double e2 = eta * eta;

  const Field du = deriv(g, w.u, 1, ops.advect);
  const Field dphi = deriv(g, w.phi, 1, ops.advect);
  Field vphi_sq(n);
  for (std::size_t i = 0; i < n; ++i) vphi_sq[i] = w.vphi[i] * w.vphi[i];
  const Field dvsq = deriv(g, vphi_sq, 1, ops.advect);

  EnergyTerms T;
  const double* phi = w.phi.data();
  const double* u = w.u.data();
  const double* dup = du.data();
  const double* dphip = dphi.data();
  const double* vsq = vphi_sq.data();
  const double* dvsqp = dvsq.data();
  const double dx = g.dx();

  T.energy = dx * kernels::sum_indexed(n, [=](std::size_t i) {
    return phi[i] * phi[i] + a1 * u[i] * u[i];
  });
  // alpha and (alpha+beta) contributions of the quadratic dissipation.
  const double diss_w = 2.0 * a1 * eps * (p.alpha + (p.alpha + p.beta));
  T.dissipation = diss_w * dx * kernels::sum_indexed(n, [=](std::size_t i) {
    return (vsq[i] + e2) * dup[i] * dup[i];
  });
  T.transport = dx * kernels::sum_indexed(n, [=](std::size_t i) {
    return dup[i] * phi[i] * phi[i] + (p.gamma - 1.0) * dphip[i] * phi[i] * u[i] +
           a1 * dup[i] * u[i] * u[i];
  });
  const double s1w = 2.0 * a1 * eps * p.q_factor() * nu;
  const double s2w = -2.0 * a1 * eps * nu;
  T.source = (s1w + s2w) * dx * kernels::sum_indexed(n, [=](std::size_t i) {
    return dvsqp[i] * dup[i] * u[i];
  });
  return T;
}

double energy_interval_residual(const EnergyTerms& a, const EnergyTerms& b, double dt) {
  const double dEdt = (b.energy - a.energy) / dt;
  const double diss = 0.5 * (a.dissipation + b.dissipation);
  const double tran = 0.5 * (a.transport + b.transport);
  const double src = 0.5 * (a.source + b.source);
  const double res = dEdt + diss - tran - src;
  const double scale = std::max({std::fabs(dEdt), std::fabs(diss), std::fabs(tran),
                                 std::fabs(src)});
  if (scale < 1e-300) return 0.0;
  return res / scale;
}

EnergyBalance energy_balance(const Trajectory& traj, const PhysParams& p,
                             const DiffOps& ops) {
  EnergyBalance out;
  if (traj.frames.size() < 2) return out;
  EnergyTerms prev = energy_terms(traj.frames[0].state, p, traj.eta, ops, traj.mode);
  for (std::size_t j = 1; j < traj.frames.size(); ++j) {
    EnergyTerms cur = energy_terms(traj.frames[j].state, p, traj.eta, ops, traj.mode);
    const double dt = traj.frames[j].t - traj.frames[j - 1].t;
    const double r = energy_interval_residual(prev, cur, dt);
    out.t_mid.push_back(0.5 * (traj.frames[j].t + traj.frames[j - 1].t));
    out.residual.push_back(r);
    out.max_residual = std::max(out.max_residual, std::fabs(r));
    prev = cur;
  }
  return out;
}

VacuumResidual vacuum_residual(const Trajectory& traj, const PhysParams& p,
                               double rho_tol, const DiffOps& ops) {
  VacuumResidual out;
  if (traj.frames.size() < 3) return out;
  std::size_t vacuum_nodes = 0;
  for (std::size_t j = 1; j + 1 < traj.frames.size(); ++j) {
    const Frame& fm = traj.frames[j - 1];
    const Frame& f0 = traj.frames[j];
    const Frame& fp = traj.frames[j + 1];
    const Grid& g = f0.state.grid;
    const double idt = 1.0 / (fp.t - fm.t);
    const Field dudx = deriv(g, f0.state.u, 1, ops.advect);
    const Field rho = mapped_rho(f0.state, p);
    double vmax = 0.0;
    double imax = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      const double ut = (fp.state.u[i] - fm.state.u[i]) * idt;
      const double material = ut + f0.state.u[i] * dudx[i];
      if (rho[i] < rho_tol) {
        ++vacuum_nodes;
        vmax = std::max(vmax, std::fabs(material));
      } else {
        imax = std::max(imax, std::fabs(ut));
      }
    }
    out.t.push_back(f0.t);
    out.value.push_back(vmax);
    out.max_value = std::max(out.max_value, vmax);
    out.interior_scale = std::max(out.interior_scale, imax);
  }
  out.applicable = vacuum_nodes > 0;
  return out;
}

ResidualSeries primitive_residual(const Trajectory& traj, const PhysParams& p,
                                  double rho_tol, const PrimForcing* forcing) {
  ResidualSeries out;
  if (traj.frames.size() < 3) return out;
  const Grid& g = traj.frames[0].state.grid;
  const std::size_t n = g.n;
  const double nu_eps = p.epsilon * p.lame_coeff();

  auto rho_of = [&](const Frame& f) { return mapped_rho(f.state, p); };

  Field f_mass(n, 0.0), f_mom(n, 0.0);
  for (std::size_t j = 1; j + 1 < traj.frames.size(); ++j) {
    const Frame& fm = traj.frames[j - 1];
    const Frame& f0 = traj.frames[j];
    const Frame& fp = traj.frames[j + 1];
    const double idt = 1.0 / (fp.t - fm.t);

    const Field rho_m = rho_of(fm), rho_0 = rho_of(f0), rho_p = rho_of(fp);
    Field mom_m(n), mom_0(n), mom_p(n), flux(n), visc(n);
    for (std::size_t i = 0; i < n; ++i) {
      mom_m[i] = rho_m[i] * fm.state.u[i];
      mom_0[i] = rho_0[i] * f0.state.u[i];
      mom_p[i] = rho_p[i] * fp.state.u[i];
    }
    // Mass flux and momentum flux + pressure.
    const Field dmom = deriv(g, mom_0, 1, kSpectral);
    for (std::size_t i = 0; i < n; ++i)
      flux[i] = mom_0[i] * f0.state.u[i] + p.A * std::pow(rho_0[i], p.gamma);
    const Field dflux = deriv(g, flux, 1, kSpectral);
    // Viscous stress nu_eps * rho^delta * u_x.
    const Field du = deriv(g, f0.state.u, 1, kSpectral);
    for (std::size_t i = 0; i < n; ++i)
      visc[i] = nu_eps * std::pow(rho_0[i], p.delta) * du[i];
    const Field dvisc = deriv(g, visc, 1, kSpectral);

    if (forcing) (*forcing)(f0.t, g, f_mass, f_mom);

    double rmass = 0.0, rmom = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rho_0[i] <= rho_tol) continue;
      const double r1 = (rho_p[i] - rho_m[i]) * idt + dmom[i] - f_mass[i];
      const double r2 = (mom_p[i] - mom_m[i]) * idt + dflux[i] - dvisc[i] - f_mom[i];
      rmass = std::max(rmass, std::fabs(r1));
      rmom = std::max(rmom, std::fabs(r2));
    }
    out.t.push_back(f0.t);
    out.mass.push_back(rmass);
    out.momentum.push_back(rmom);
    out.max_mass = std::max(out.max_mass, rmass);
    out.max_momentum = std::max(out.max_momentum, rmom);
  }
  return out;
}

EtaStudy eta_limit_study(const SymState& initial, const FrozenCoeffs& coeffs,
                         const std::vector<double>& eta_list, const SimConfig& cfg) {
  if (eta_list.size() < 3)
    throw std::invalid_argument("eta_limit_study: need at least 3 eta values");
  for (std::size_t i = 1; i < eta_list.size(); ++i)
    if (!(eta_list[i] < eta_list[i - 1]))
      throw std::invalid_argument("eta_limit_study: eta list must be strictly decreasing");

  EtaStudy out;
  out.etas = eta_list;
  std::vector<Trajectory> runs;
  runs.reserve(eta_list.size());
  for (double eta : eta_list) {
    Trajectory t = solve_linearized(initial, coeffs, eta, cfg);
    if (t.failed())
      throw std::runtime_error("eta_limit_study: member run failed at t = " +
                               std::to_string(t.failure->time));
    runs.push_back(std::move(t));
  }
  for (std::size_t i = 0; i + 1 < runs.size(); ++i)
    out.distance.push_back(sup_l2_distance(runs[i], runs[i + 1]));
  out.monotone = true;
  for (std::size_t i = 1; i < out.distance.size(); ++i)
    if (!(out.distance[i] < out.distance[i - 1])) out.monotone = false;
  return out;
}

double sup_l2_distance(const Trajectory& a, const Trajectory& b, std::size_t n_samples) {
  const Grid& g = a.frames.front().state.grid;
  if (b.frames.front().state.grid.n != g.n)
    throw std::invalid_argument("sup_l2_distance: grid mismatch");
  const double t0 = std::max(a.frames.front().t, b.frames.front().t);
  const double t1 = std::min(a.frames.back().t, b.frames.back().t);
  std::vector<double> times;
  if (n_samples == 0) {
    for (const Frame& f : a.frames)
      if (f.t >= t0 && f.t <= t1) times.push_back(f.t);
  } else {
    for (std::size_t j = 0; j < n_samples; ++j)
      times.push_back(t0 + (t1 - t0) * static_cast<double>(j) /
                              static_cast<double>(n_samples - 1));
  }
  SymState sa(g), sb(g);
  double sup = 0.0;
  for (double t : times) {
    a.sample(t, sa);
    b.sample(t, sb);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      acc += sq(sa.phi[i] - sb.phi[i]) + sq(sa.u[i] - sb.u[i]);
    }
    sup = std::max(sup, std::sqrt(acc * g.dx()));
  }
  return sup;
}

}  // namespace vvlab
