#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvlab/grid.hpp"
#include "vvlab/initial_data.hpp"
#include "vvlab/params.hpp"
#include "vvlab/rhs.hpp"
#include "vvlab/state.hpp"

namespace vvlab {

enum class Integrator { SspRk3, ImexArs222 };

struct StepRecord {
  double t = 0;                // time after the step
  double dt = 0;
  double max_speed = 0;        // characteristic bound used for the CFL
  double apriori = 0;          // monitored functional after the step
  double energy_residual = 0;  // normalized zero-order balance residual (NaN if n/a)
};

struct Frame {
  double t = 0;
  SymState state;
};

struct Failure {
  double time = 0;
  std::string reason;
};

struct SimConfig {
  PhysParams params;
  Grid grid;
  double t_end = 0.1;
  double cfl_hyp = 0.4;
  double cfl_par = 0.25;
  Integrator integrator = Integrator::SspRk3;
  double blowup_factor = 1e3;
  std::size_t n_frames = 20;  // saved frames after t = 0
  Mode mode = Mode::NS;
  InitialData initial;
  DiffOps ops;
  const Forcing* forcing = nullptr;
  bool record_steps = true;
  /// solve_linearized switches to the IMEX integrator for eta > 0 (the
  /// u-equation is then uniformly parabolic); clear to force cfg.integrator.
  bool auto_imex = true;
};

struct Trajectory {
  std::vector<Frame> frames;
  std::vector<StepRecord> steps;
  std::optional<Failure> failure;
  Mode mode = Mode::NS;  // dynamics that produced the frames
  double eta = 0.0;

  bool failed() const { return failure.has_value(); }
  double end_time() const { return frames.empty() ? 0.0 : frames.back().t; }
  const Grid& grid() const { return frames.front().state.grid; }

  /// Piecewise-linear sample of the stored frames at time t (clamped to the
  /// covered interval).
  void sample(double t, SymState& out) const;
};

/// Time-dependent frozen coefficients (omega, psi, v) for the linearized
/// system: either interpolated from a trajectory or held constant.
struct FrozenCoeffs {
  const Trajectory* traj = nullptr;
  const SymState* constant = nullptr;

  void sample(double t, SymState& out) const;
};

/// CFL time step: hyperbolic branch from the characteristic speeds,
/// explicit parabolic branch from the degenerate viscous coefficient
/// (dropped under IMEX, for the Euler mode, and when the coefficient
/// vanishes). Returns +inf when nothing restricts the step.
double cfl_dt(const SymState& state, const SimConfig& cfg, double eta, Mode mode,
              const SymState* frozen_now);

/// Integrates the configured mode from cfg.initial to t_end; aborts on NaN
/// or on the monitored functional exceeding blowup_factor times its initial
/// value, leaving a partial trajectory plus failure marker.
Trajectory run(const SimConfig& cfg);

/// Same loop from a caller-provided initial state.
Trajectory run_from(const SimConfig& cfg, const SymState& initial);

/// Linearized evolution with frozen coefficients and regularization eta.
/// cfg.mode is ignored (forced to Linearized); with eta > 0 the default
/// integrator choice is IMEX.
Trajectory solve_linearized(const SymState& initial, const FrozenCoeffs& coeffs,
                            double eta, SimConfig cfg);

/// Restriction of a state to a coarser grid whose node set is a subset
/// (node counts must divide evenly).
SymState restrict_state(const SymState& fine, const Grid& coarse);

}  // namespace vvlab
