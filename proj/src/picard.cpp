#include "vvlab/picard.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vvlab/kernels.hpp"
#include "vvlab/norms.hpp"

namespace vvlab {

namespace {

// Warm-start system: two transport equations along the fixed initial
// velocity and a degenerate heat flow for the velocity, integrated with the
// same SSP-RK3 stepping as the main solver.
Trajectory warm_start(const PicardConfig& cfg) {
  const SimConfig& base = cfg.base;
  const Grid& g = base.grid;
  SymState state = build_initial(g, base.params, base.initial);
  const Field u0 = state.u;

  const double diff_scale = cfg.eps_scaled_diffusion ? base.params.epsilon : 1.0;
  const DiffOp d1 = base.ops.advect;
  const DiffOp d2 = base.ops.viscous;

  Trajectory traj;
  traj.frames.push_back({0.0, state});
  const std::size_t nf = std::max<std::size_t>(1, base.n_frames);
  std::vector<double> frame_times(nf);
  for (std::size_t j = 0; j < nf; ++j)
    frame_times[j] = base.t_end * static_cast<double>(j + 1) / static_cast<double>(nf);

  const double* u0p = u0.data();
  double umax = kernels::max_indexed(g.n, [u0p](std::size_t i) { return std::fabs(u0p[i]); });

  auto rhs = [&](const SymState& s, SymState& out) {
    const Field dX = deriv(g, s.vphi, 1, d1);
    const Field dY = deriv(g, s.phi, 1, d1);
    const Field d2Z = deriv(g, s.u, 2, d2);
    for (std::size_t i = 0; i < g.n; ++i) {
      out.vphi[i] = -u0[i] * dX[i];
      out.phi[i] = -u0[i] * dY[i];
      out.u[i] = diff_scale * s.vphi[i] * s.vphi[i] * d2Z[i];
    }
  };

  double t = 0.0;
  std::size_t next_frame = 0;
  const double dx = g.dx();
  const double tiny = 1e-13 * base.t_end;
  SymState k(g), s1(g);
  while (t < base.t_end - tiny) {
    const double* xv = state.vphi.data();
    double xmax2 = kernels::max_indexed(g.n, [xv](std::size_t i) { return xv[i] * xv[i]; });
    double dt = std::numeric_limits<double>::infinity();
    if (umax > 1e-300) dt = base.cfl_hyp * dx / umax;
    if (diff_scale * xmax2 > 1e-300)
      dt = std::min(dt, base.cfl_par * dx * dx / (diff_scale * xmax2));
    const double target = frame_times[next_frame];
    if (!(dt > 0.0) || t + dt >= target - tiny) dt = target - t;

    auto stage = [&](const SymState& in, SymState& out, const SymState& ref, double wref,
                     double win) {
      rhs(in, k);
      for (std::size_t i = 0; i < g.n; ++i) {
        out.vphi[i] = wref * ref.vphi[i] + win * (in.vphi[i] + dt * k.vphi[i]);
        out.phi[i] = wref * ref.phi[i] + win * (in.phi[i] + dt * k.phi[i]);
        out.u[i] = wref * ref.u[i] + win * (in.u[i] + dt * k.u[i]);
      }
    };
    SymState u1 = state;
    stage(state, u1, state, 0.0, 1.0);
    stage(u1, s1, state, 0.75, 0.25);
    stage(s1, u1, state, 1.0 / 3.0, 2.0 / 3.0);
    state = u1;

    t = (std::fabs(t + dt - target) <= tiny) ? target : t + dt;
    if (t >= target - tiny) {
      traj.frames.push_back({target, state});
      ++next_frame;
      if (next_frame >= frame_times.size()) break;
    }
  }
  return traj;
}

Trajectory constant_start(const PicardConfig& cfg) {
  const SimConfig& base = cfg.base;
  SymState state = build_initial(base.grid, base.params, base.initial);
  Trajectory traj;
  const std::size_t nf = std::max<std::size_t>(1, base.n_frames);
  traj.frames.push_back({0.0, state});
  for (std::size_t j = 0; j < nf; ++j) {
    const double t = base.t_end * static_cast<double>(j + 1) / static_cast<double>(nf);
    traj.frames.push_back({t, state});
  }
  return traj;
}

// sup over sampled times of |f_a - f_b|_2^2 for one field.
double sup_l2_sq(const Trajectory& a, const Trajectory& b, std::size_t samples,
                 double t_end, Field SymState::* field) {
  const Grid& g = a.frames.front().state.grid;
  SymState sa(g), sb(g);
  double sup = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double t = t_end * static_cast<double>(j) / static_cast<double>(samples - 1);
    a.sample(t, sa);
    b.sample(t, sb);
    double acc = 0.0;
    const Field& fa = sa.*field;
    const Field& fb = sb.*field;
    for (std::size_t i = 0; i < g.n; ++i) {
      const double d = fa[i] - fb[i];
      acc += d * d;
    }
    sup = std::max(sup, acc * g.dx());
  }
  return sup;
}

}  // namespace

Trajectory picard_init(const PicardConfig& cfg) {
  return cfg.start == PicardConfig::Start::Warm ? warm_start(cfg) : constant_start(cfg);
}

Trajectory picard_step(const Trajectory& prev, const PicardConfig& cfg) {
  if (prev.frames.empty() || prev.frames.back().t < cfg.base.t_end * (1.0 - 1e-12))
    throw std::invalid_argument("picard_step: previous iterate does not cover the horizon");
  SymState init = build_initial(cfg.base.grid, cfg.base.params, cfg.base.initial);
  FrozenCoeffs coeffs;
  coeffs.traj = &prev;
  return solve_linearized(init, coeffs, 0.0, cfg.base);
}

PicardReport picard_run(const PicardConfig& cfg) {
  if (cfg.iterations < 2) throw std::invalid_argument("picard_run: need K >= 2");
  PicardReport rep;
  rep.start_mode = cfg.start == PicardConfig::Start::Warm ? "warm" : "constant";

  Trajectory prev = picard_init(cfg);
  const double eps = cfg.base.params.epsilon;
  const std::size_t samples = std::max<std::size_t>(2, cfg.compare_points);

  for (int k = 0; k < cfg.iterations; ++k) {
    Trajectory next = picard_step(prev, cfg);
    if (next.failed()) {
      rep.failed = true;
      rep.failure_reason = next.failure->reason;
      rep.last = std::move(next);
      return rep;
    }
    const double w_sq = sup_l2_sq(next, prev, samples, cfg.base.t_end, &SymState::phi) +
                        sup_l2_sq(next, prev, samples, cfg.base.t_end, &SymState::u);
    const double v_sq = sup_l2_sq(next, prev, samples, cfg.base.t_end, &SymState::vphi);
    rep.gamma.push_back(w_sq + eps * v_sq);

    // Dissipation integral of the velocity increment, trapezoid in time.
    {
      const Grid& g = cfg.base.grid;
      SymState sa(g), sb(g);
      double integral = 0.0;
      double prev_val = 0.0;
      const DiffOp d1 = cfg.base.ops.advect;
      for (std::size_t j = 0; j < samples; ++j) {
        const double t =
            cfg.base.t_end * static_cast<double>(j) / static_cast<double>(samples - 1);
        next.sample(t, sa);
        prev.sample(t, sb);
        Field ubar(g.n);
        for (std::size_t i = 0; i < g.n; ++i) ubar[i] = sa.u[i] - sb.u[i];
        Field dub = deriv(g, ubar, 1, d1);
        for (std::size_t i = 0; i < g.n; ++i) dub[i] *= sa.vphi[i];
        const double nrm = l2_norm(g, dub);
        const double val = eps * nrm * nrm;
        if (j > 0)
          integral += 0.5 * (val + prev_val) * cfg.base.t_end /
                      static_cast<double>(samples - 1);
        prev_val = val;
      }
      rep.dissipation.push_back(integral);
    }

    ++rep.completed_iterations;
    prev = std::move(next);
  }
  rep.last = std::move(prev);

  for (std::size_t k = 1; k < rep.gamma.size(); ++k) {
    if (rep.gamma[k - 1] < 1e-14) {
      rep.ratio.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double r = rep.gamma[k] / rep.gamma[k - 1];
    rep.ratio.push_back(r);
    if (r >= 1.0) rep.contraction_warning = true;
  }
  return rep;
}

}  // namespace vvlab
