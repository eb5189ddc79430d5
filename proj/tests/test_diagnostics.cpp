#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvlab/diagnostics.hpp"
#include "vvlab/mms.hpp"
#include "vvlab/norms.hpp"

using namespace vvlab;

namespace {
SimConfig bump_cfg(std::size_t n, double t_end) {
  SimConfig cfg;
  cfg.grid = Grid(1.0, n);
  cfg.t_end = t_end;
  cfg.n_frames = 20;
  cfg.params.epsilon = 0.01;
  cfg.mode = Mode::NS;
  return cfg;
}
}  // namespace

TEST_CASE("monitored functional: zero state and t = 0 value") {
  Grid g(1.0, 64);
  PhysParams p;
  SymState zero(g);
  CHECK(apriori_state_value(zero, p) == 0.0);
  CHECK(apriori_dissipation_rate(zero, p) == 0.0);

  SimConfig cfg = bump_cfg(128, 0.005);
  Trajectory t = run(cfg);
  REQUIRE(!t.failed());
  auto series = apriori_series(t, cfg.params);
  REQUIRE(!series.empty());
  CHECK(series[0].time_integral == 0.0);
  const SymState init = build_initial(cfg.grid, cfg.params, cfg.initial);
  CHECK(series[0].total == doctest::Approx(apriori_state_value(init, cfg.params)));
  // Summands are individually nonnegative, integral nondecreasing.
  double prev_integral = 0.0;
  for (const auto& r : series) {
    CHECK(r.phi_h3_sq >= 0.0);
    CHECK(r.u_d3_sq >= 0.0);
    CHECK(r.time_integral >= prev_integral);
    prev_integral = r.time_integral;
  }
}

TEST_CASE("energy identity: exactly zero residual on constant states") {
  Grid g(1.0, 64);
  PhysParams p;
  DiffOps ops;
  SymState s(g);
  s.phi.assign(g.n, 0.7);
  s.vphi.assign(g.n, 0.7);
  EnergyTerms a = energy_terms(s, p, 0.0, ops);
  EnergyTerms b = a;
  CHECK(energy_interval_residual(a, b, 0.01) == 0.0);
  CHECK(a.dissipation == 0.0);
  CHECK(a.transport == 0.0);
}

TEST_CASE("energy identity residual shrinks under refinement") {
  auto residual_at = [](std::size_t n) {
    SimConfig cfg = bump_cfg(n, 0.02);
    cfg.n_frames = n / 8;
    Trajectory t = run(cfg);
    REQUIRE(!t.failed());
    EnergyBalance eb = energy_balance(t, cfg.params, cfg.ops);
    return eb.max_residual;
  };
  const double r1 = residual_at(128);
  const double r2 = residual_at(256);
  CHECK(r2 < r1);
  CHECK(r1 / r2 >= 2.0);  // at least first order in the joint refinement
}

TEST_CASE("euler-mode energy identity reduces to the transport term") {
  // With epsilon terms absent the residual measures
  // d/dt integral W^T A0 W - integral W^T divA(W) W alone; it must shrink
  // under joint space/time refinement.
  auto residual_at = [](std::size_t n) {
    SimConfig cfg = bump_cfg(n, 0.02);
    cfg.mode = Mode::Euler;
    cfg.n_frames = n / 8;
    Trajectory t = run(cfg);
    REQUIRE(!t.failed());
    return energy_balance(t, cfg.params, cfg.ops).max_residual;
  };
  const double r1 = residual_at(128);
  const double r2 = residual_at(256);
  CHECK(r2 < r1);
  CHECK(r1 / r2 >= 2.0);
}

TEST_CASE("vacuum residual: not applicable without vacuum") {
  SimConfig cfg = bump_cfg(128, 0.01);
  cfg.initial.kind = InitialData::Kind::Gauss;  // strictly positive density
  cfg.initial.base = 0.5;
  Trajectory t = run(cfg);
  REQUIRE(!t.failed());
  VacuumResidual vr = vacuum_residual(t, cfg.params, 1e-10);
  CHECK(!vr.applicable);
}

TEST_CASE("vacuum residual: bump exterior satisfies the transport condition") {
  SimConfig cfg = bump_cfg(256, 0.02);
  Trajectory t = run(cfg);
  REQUIRE(!t.failed());
  VacuumResidual vr = vacuum_residual(t, cfg.params, 1e-10);
  REQUIRE(vr.applicable);
  REQUIRE(vr.interior_scale > 0.0);
  CHECK(vr.max_value <= 1e-6 * vr.interior_scale);
}

TEST_CASE("vacuum residual is Galilean-consistent on a fully vacuum field") {
  // Manufactured trajectory: rho = 0 everywhere, u constant in space and
  // time. The material derivative vanishes identically, with or without a
  // constant velocity offset.
  Grid g(1.0, 64);
  PhysParams p;
  Trajectory traj;
  for (int j = 0; j < 5; ++j) {
    Frame f;
    f.t = 0.01 * j;
    f.state = SymState(g);
    f.state.u.assign(g.n, 0.35);  // constant offset
    traj.frames.push_back(f);
  }
  VacuumResidual vr = vacuum_residual(traj, p, 1e-10);
  REQUIRE(vr.applicable);
  CHECK(vr.max_value <= 1e-13);
}

TEST_CASE("primitive residual: zero for constant states") {
  Grid g(1.0, 64);
  PhysParams p;
  Trajectory traj;
  for (int j = 0; j < 4; ++j) {
    Frame f;
    f.t = 0.01 * j;
    f.state = SymState(g);
    f.state.phi.assign(g.n, 0.9);
    f.state.vphi.assign(g.n, 0.9);
    traj.frames.push_back(f);
  }
  ResidualSeries rs = primitive_residual(traj, p, 1e-10);
  CHECK(rs.max_mass <= 1e-12);
  CHECK(rs.max_momentum <= 1e-12);
}

TEST_CASE("manufactured solution: primitive residual converges at order 2") {
  PhysParams p;
  p.epsilon = 0.5;
  auto residual_at = [&](std::size_t n) {
    SimConfig cfg;
    cfg.grid = Grid(1.0, n);
    cfg.params = p;
    cfg.t_end = 0.02;
    cfg.n_frames = n / 8;
    cfg.mode = Mode::NS;
    cfg.integrator = Integrator::ImexArs222;
    cfg.record_steps = false;
    MmsSolution mms(p);
    cfg.forcing = &mms;
    SymState init = mms.exact(0.0, cfg.grid);
    Trajectory t = run_from(cfg, init);
    REQUIRE(!t.failed());
    PrimForcing pf = mms.primitive_forcing();
    ResidualSeries rs = primitive_residual(t, p, 1e-10, &pf);
    return std::max(rs.max_mass, rs.max_momentum);
  };
  const double e1 = residual_at(64);
  const double e2 = residual_at(128);
  const double order = std::log2(e1 / e2);
  CHECK(order == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("bump run: masked primitive residual refines at the formal order") {
  auto residual_at = [](std::size_t n) {
    SimConfig cfg = bump_cfg(n, 0.02);
    cfg.n_frames = n / 8;
    cfg.record_steps = false;
    Trajectory t = run(cfg);
    REQUIRE(!t.failed());
    ResidualSeries rs = primitive_residual(t, cfg.params, 1e-10);
    return std::max(rs.max_mass, rs.max_momentum);
  };
  const double e1 = residual_at(128);
  const double e2 = residual_at(256);
  const double e3 = residual_at(512);
  CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.35));
  CHECK(std::log2(e2 / e3) == doctest::Approx(2.0).epsilon(0.35));
}

TEST_CASE("eta study: identical eta gives distance zero and validation works") {
  SimConfig cfg = bump_cfg(64, 0.005);
  cfg.n_frames = 5;
  SymState init = build_initial(cfg.grid, cfg.params, cfg.initial);
  SymState frozen = init;
  FrozenCoeffs coeffs;
  coeffs.constant = &frozen;

  Trajectory a = solve_linearized(init, coeffs, 0.05, cfg);
  Trajectory b = solve_linearized(init, coeffs, 0.05, cfg);
  CHECK(sup_l2_distance(a, b) == 0.0);

  CHECK_THROWS_AS(eta_limit_study(init, coeffs, {0.1, 0.2, 0.05}, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(eta_limit_study(init, coeffs, {0.1, 0.05}, cfg),
                  std::invalid_argument);
}

TEST_CASE("eta study: distances decrease toward the limit") {
  SimConfig cfg = bump_cfg(128, 0.01);
  cfg.integrator = Integrator::ImexArs222;
  cfg.n_frames = 10;
  cfg.record_steps = false;

  SimConfig coeff_run = cfg;
  coeff_run.mode = Mode::NS;
  coeff_run.n_frames = 20;
  Trajectory coeff_traj = run(coeff_run);
  REQUIRE(!coeff_traj.failed());
  FrozenCoeffs coeffs;
  coeffs.traj = &coeff_traj;

  SymState init = build_initial(cfg.grid, cfg.params, cfg.initial);
  EtaStudy study = eta_limit_study(init, coeffs, {1e-1, 1e-2, 1e-3, 1e-4}, cfg);
  REQUIRE(study.distance.size() == 3);
  CHECK(study.monotone);
  CHECK(study.distance[2] <= 0.1 * study.distance[0]);
}
