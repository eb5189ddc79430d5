#include "vvlab/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vvlab/diagnostics.hpp"
#include "vvlab/kernels.hpp"
#include "vvlab/linear_solve.hpp"
#include "vvlab/sym_system.hpp"

namespace vvlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool state_finite(const SymState& s) {
  return kernels::all_finite(s.vphi.data(), s.vphi.size()) &&
         kernels::all_finite(s.phi.data(), s.phi.size()) &&
         kernels::all_finite(s.u.data(), s.u.size());
}

void axpy_state(SymState& y, double a, const SymRhs& r) {
  const std::size_t n = y.u.size();
  double* yv = y.vphi.data();
  double* yp = y.phi.data();
  double* yu = y.u.data();
  const double* rv = r.dvphi.data();
  const double* rp = r.dphi.data();
  const double* ru = r.du.data();
  kernels::map_indexed(n, yv, [=](std::size_t i) { return yv[i] + a * rv[i]; });
  kernels::map_indexed(n, yp, [=](std::size_t i) { return yp[i] + a * rp[i]; });
  kernels::map_indexed(n, yu, [=](std::size_t i) { return yu[i] + a * ru[i]; });
}

void blend_state(SymState& y, double wy, const SymState& x, double wx) {
  const std::size_t n = y.u.size();
  double* yv = y.vphi.data();
  double* yp = y.phi.data();
  double* yu = y.u.data();
  const double* xv = x.vphi.data();
  const double* xp = x.phi.data();
  const double* xu = x.u.data();
  kernels::map_indexed(n, yv, [=](std::size_t i) { return wy * yv[i] + wx * xv[i]; });
  kernels::map_indexed(n, yp, [=](std::size_t i) { return wy * yp[i] + wx * xp[i]; });
  kernels::map_indexed(n, yu, [=](std::size_t i) { return wy * yu[i] + wx * xu[i]; });
}

struct StageContext {
  const SimConfig* cfg;
  Mode mode;
  double eta;
  const FrozenCoeffs* frozen;
  SymState frozen_buf;

  const SymState* frozen_at(double t) {
    if (!frozen) return nullptr;
    frozen->sample(t, frozen_buf);
    return &frozen_buf;
  }

  void eval(const SymState& s, double t, SymRhs& out, bool include_viscous) {
    eval_rhs(s.grid, cfg->params, mode, eta, s, frozen_at(t), cfg->ops, cfg->forcing, t,
             out, include_viscous);
  }
};

void step_ssp_rk3(StageContext& ctx, SymState& state, double t, double dt) {
  SymRhs k(state.grid.n);
  ctx.eval(state, t, k, true);
  SymState u1 = state;
  axpy_state(u1, dt, k);

  ctx.eval(u1, t + dt, k, true);
  axpy_state(u1, dt, k);
  blend_state(u1, 0.25, state, 0.75);  // u2 = 3/4 u + 1/4 (u1 + dt f(u1))

  ctx.eval(u1, t + 0.5 * dt, k, true);
  axpy_state(u1, dt, k);
  blend_state(u1, 2.0 / 3.0, state, 1.0 / 3.0);
  state = std::move(u1);
}

// Implicit viscous application: out = kappa * D2 u (FD2 stencil).
void apply_diffusion(const Grid& g, const Field& kappa, const Field& u, Field& out) {
  const double idx2 = 1.0 / (g.dx() * g.dx());
  const std::size_t n = g.n;
  const double* up = u.data();
  const double* kp = kappa.data();
  kernels::map_indexed(n, out.data(), [=](std::size_t i) {
    const std::size_t im = (i == 0) ? n - 1 : i - 1;
    const std::size_t ip = (i + 1 == n) ? 0 : i + 1;
    return kp[i] * (up[im] - 2.0 * up[i] + up[ip]) * idx2;
  });
}

// (I - a * diag(kappa) * D2) y = rhs, cyclic tridiagonal.
void solve_implicit(const Grid& g, const Field& kappa, double a, const Field& rhs,
                    Field& y) {
  const std::size_t n = g.n;
  const double idx2 = 1.0 / (g.dx() * g.dx());
  Field low(n), diag(n), up(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double b = a * kappa[i] * idx2;
    low[i] = -b;
    diag[i] = 1.0 + 2.0 * b;
    up[i] = -b;
  }
  y.resize(n);
  solve_cyclic_tridiagonal(low, diag, up, rhs, y);
}

// ARS(2,2,2): explicit tableau c = (0, g, 1), rows (0), (g, 0), (d, 1-d, 0);
// implicit rows (0), (0, g), (0, 1-g, g); both b rows equal the last stage
// row, so the scheme is stiffly accurate. The transport rows carry no stiff
// part, so each stage's density power is known before its velocity solve
// and the implicit coefficient is evaluated per stage.
void step_imex_ars222(StageContext& ctx, SymState& state, double t, double dt) {
  const double gm = 1.0 - 1.0 / std::sqrt(2.0);
  const double dl = 1.0 - 1.0 / (2.0 * gm);
  const Grid& g = state.grid;
  const std::size_t n = g.n;
  const PhysParams& p = ctx.cfg->params;

  const double eps_nu = p.epsilon * p.lame_coeff();
  const double e2 = (ctx.mode == Mode::NS) ? 0.0 : ctx.eta * ctx.eta;
  Field kappa(n);
  auto stage_kappa = [&](const SymState& s) {
    for (std::size_t i = 0; i < n; ++i)
      kappa[i] = eps_nu * (s.vphi[i] * s.vphi[i] + e2);
  };

  SymRhs k1(n);
  ctx.eval(state, t, k1, false);

  // Stage 2.
  SymState u2 = state;
  axpy_state(u2, gm * dt, k1);
  stage_kappa(u2);
  Field urhs = u2.u;
  solve_implicit(g, kappa, gm * dt, urhs, u2.u);
  Field k2i(n);
  apply_diffusion(g, kappa, u2.u, k2i);

  SymRhs k2(n);
  ctx.eval(u2, t + gm * dt, k2, false);

  // Stage 3 = new state.
  SymState u3 = state;
  axpy_state(u3, dl * dt, k1);
  axpy_state(u3, (1.0 - dl) * dt, k2);
  {
    double* uu = u3.u.data();
    const double* ki = k2i.data();
    const double c = (1.0 - gm) * dt;
    kernels::map_indexed(n, uu, [=](std::size_t i) { return uu[i] + c * ki[i]; });
  }
  stage_kappa(u3);
  urhs = u3.u;
  solve_implicit(g, kappa, gm * dt, urhs, u3.u);
  state = std::move(u3);
}

}  // namespace

void Trajectory::sample(double t, SymState& out) const {
  if (frames.empty()) throw std::logic_error("Trajectory::sample: no frames");
  if (t <= frames.front().t) {
    out = frames.front().state;
    return;
  }
  if (t >= frames.back().t) {
    out = frames.back().state;
    return;
  }
  std::size_t hi = 1;
  while (frames[hi].t < t) ++hi;
  const Frame& a = frames[hi - 1];
  const Frame& b = frames[hi];
  const double th = (t - a.t) / (b.t - a.t);
  out = a.state;
  const std::size_t n = out.u.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.vphi[i] += th * (b.state.vphi[i] - a.state.vphi[i]);
    out.phi[i] += th * (b.state.phi[i] - a.state.phi[i]);
    out.u[i] += th * (b.state.u[i] - a.state.u[i]);
  }
}

void FrozenCoeffs::sample(double t, SymState& out) const {
  if (constant) {
    out = *constant;
    return;
  }
  if (!traj) throw std::logic_error("FrozenCoeffs: no source");
  traj->sample(t, out);
}

double cfl_dt(const SymState& state, const SimConfig& cfg, double eta, Mode mode,
              const SymState* frozen_now) {
  const PhysParams& p = cfg.params;
  const double dx = cfg.grid.dx();
  const SymState& speed_src = (mode == Mode::Linearized && frozen_now) ? *frozen_now : state;
  const double speed = max_char_speed(speed_src, p);
  double dt = kInf;
  if (speed > 1e-300) dt = cfg.cfl_hyp * dx / speed;
  if (mode != Mode::Euler && cfg.integrator == Integrator::SspRk3) {
    const double e2 = (mode == Mode::NS) ? 0.0 : eta * eta;
    const double* vp = state.vphi.data();
    double vmax2 = kernels::max_indexed(state.vphi.size(),
                                        [vp](std::size_t i) { return vp[i] * vp[i]; });
    const double diff = p.epsilon * p.lame_coeff() * (vmax2 + e2);
    if (diff > 1e-300) dt = std::min(dt, cfg.cfl_par * dx * dx / diff);
  }
  return dt;
}

namespace {

Trajectory integrate(const SimConfig& cfg, SymState state, const FrozenCoeffs* frozen,
                     double eta, Mode mode) {
  require_valid(cfg.params);
  if (!(cfg.t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");
  if (!(cfg.cfl_hyp > 0.0 && cfg.cfl_hyp <= 1.0) || !(cfg.cfl_par > 0.0 && cfg.cfl_par <= 1.0))
    throw std::invalid_argument("integrate: CFL factors must lie in (0, 1]");
  if (cfg.integrator == Integrator::ImexArs222 && cfg.ops.viscous.kind != DiffKind::FD2)
    throw std::invalid_argument("integrate: the IMEX path requires the FD2 viscous operator");

  StageContext ctx{&cfg, mode, eta, frozen, SymState(cfg.grid)};

  Trajectory traj;
  traj.mode = mode;
  traj.eta = eta;
  const std::size_t nf = std::max<std::size_t>(1, cfg.n_frames);
  std::vector<double> frame_times(nf);
  for (std::size_t j = 0; j < nf; ++j)
    frame_times[j] = cfg.t_end * static_cast<double>(j + 1) / static_cast<double>(nf);

  double t = 0.0;
  double integral = 0.0;  // time-integral term of the monitored functional
  double rate_prev = apriori_dissipation_rate(state, cfg.params);
  const double j0 = apriori_state_value(state, cfg.params);
  const double threshold = cfg.blowup_factor * j0;
  EnergyTerms eprev;
  const bool track_energy = mode != Mode::Linearized && cfg.record_steps;
  if (track_energy) eprev = energy_terms(state, cfg.params, eta, cfg.ops, mode);

  traj.frames.push_back({0.0, state});
  std::size_t next_frame = 0;

  const double tiny = 1e-13 * cfg.t_end;
  while (t < cfg.t_end - tiny) {
    if (!state_finite(state)) {
      traj.failure = Failure{t, "non-finite state"};
      break;
    }
    double dt = cfl_dt(state, cfg, eta, mode, ctx.frozen_at(t));
    const double target = frame_times[next_frame];
    if (!(dt > 0.0) || t + dt >= target - tiny) dt = target - t;

    if (cfg.integrator == Integrator::SspRk3)
      step_ssp_rk3(ctx, state, t, dt);
    else
      step_imex_ars222(ctx, state, t, dt);
    t = (std::fabs(t + dt - target) <= tiny) ? target : t + dt;

    if (!state_finite(state)) {
      traj.failure = Failure{t, "non-finite state"};
      break;
    }

    const double rate = apriori_dissipation_rate(state, cfg.params);
    integral += 0.5 * dt * (rate_prev + rate);
    rate_prev = rate;
    const double j_now = apriori_state_value(state, cfg.params) + integral;

    if (cfg.record_steps) {
      StepRecord rec;
      rec.t = t;
      rec.dt = dt;
      rec.max_speed = max_char_speed(mode == Mode::Linearized ? *ctx.frozen_at(t) : state,
                                     cfg.params);
      rec.apriori = j_now;
      if (track_energy) {
        EnergyTerms enow = energy_terms(state, cfg.params, eta, cfg.ops, mode);
        rec.energy_residual = energy_interval_residual(eprev, enow, dt);
        eprev = enow;
      } else {
        rec.energy_residual = std::numeric_limits<double>::quiet_NaN();
      }
      traj.steps.push_back(rec);
    }

    if (t >= target - tiny) {
      traj.frames.push_back({target, state});
      ++next_frame;
      if (next_frame >= frame_times.size()) break;
    }

    if (j_now > threshold && j0 > 0.0) {
      traj.failure = Failure{t, "blow-up: monitored functional exceeded threshold"};
      break;
    }
  }

  if (traj.failure && (traj.frames.empty() || traj.frames.back().t < traj.failure->time)) {
    traj.frames.push_back({traj.failure->time, state});
  }
  return traj;
}

}  // namespace

Trajectory run(const SimConfig& cfg) {
  SymState init = build_initial(cfg.grid, cfg.params, cfg.initial);
  return run_from(cfg, init);
}

Trajectory run_from(const SimConfig& cfg, const SymState& initial) {
  if (cfg.mode == Mode::Linearized)
    throw std::invalid_argument("run: use solve_linearized for the linearized mode");
  return integrate(cfg, initial, nullptr, 0.0, cfg.mode);
}

Trajectory solve_linearized(const SymState& initial, const FrozenCoeffs& coeffs,
                            double eta, SimConfig cfg) {
  cfg.mode = Mode::Linearized;
  if (eta > 0.0 && cfg.auto_imex) cfg.integrator = Integrator::ImexArs222;
  return integrate(cfg, initial, &coeffs, eta, Mode::Linearized);
}

SymState restrict_state(const SymState& fine, const Grid& coarse) {
  if (fine.grid.n % coarse.n != 0 || fine.grid.length != coarse.length)
    throw std::invalid_argument("restrict_state: grids are not nested");
  const std::size_t stride = fine.grid.n / coarse.n;
  SymState out(coarse);
  for (std::size_t i = 0; i < coarse.n; ++i) {
    out.vphi[i] = fine.vphi[i * stride];
    out.phi[i] = fine.phi[i * stride];
    out.u[i] = fine.u[i * stride];
  }
  return out;
}

}  // namespace vvlab
