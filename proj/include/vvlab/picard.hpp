#pragma once

#include <string>
#include <vector>

#include "vvlab/stepper.hpp"

namespace vvlab {

/// Fixed-point iteration on the linearized system: iterate k+1 solves the
/// transport equation with the velocity of iterate k and the symmetric block
/// with coefficients frozen at iterate k (eta = 0).
struct PicardConfig {
  SimConfig base;                // grid, params, data, horizon
  int iterations = 6;            // number of fixed-point steps K
  enum class Start { Warm, Constant } start = Start::Warm;
  /// Scale the warm-start heat flow by epsilon instead of running it
  /// unscaled (both conventions are meaningful; unscaled is the default).
  bool eps_scaled_diffusion = false;
  std::size_t compare_points = 50;  // time samples for the contraction metric
};

struct PicardReport {
  /// gamma[k] = sup_t |W^{k+1}-W^k|_2^2 + sup_t eps |vphi^{k+1}-vphi^k|_2^2,
  /// k = 0..K-1.
  std::vector<double> gamma;
  /// ratio[k-1] = gamma[k]/gamma[k-1] for k >= 1; entries are skipped (NaN)
  /// once the predecessor drops below 1e-14 (converged to rounding).
  std::vector<double> ratio;
  /// Dissipation integrals int eps |vphi^{k+1} d/dx (u^{k+1}-u^k)|_2^2 dt.
  std::vector<double> dissipation;
  bool contraction_warning = false;  // some ratio >= 1 past the first step
  std::string start_mode;
  bool failed = false;
  std::string failure_reason;
  int completed_iterations = 0;
  Trajectory last;  // final iterate
};

/// Iterate 0: transport of (vphi0, phi0) along the fixed initial velocity
/// plus the density-power-weighted heat flow of u0; or the constant-in-time
/// extension of the data when PicardConfig::Start::Constant is selected.
Trajectory picard_init(const PicardConfig& cfg);

/// One fixed-point step: coefficients interpolated from the previous
/// iterate's frames.
Trajectory picard_step(const Trajectory& prev, const PicardConfig& cfg);

PicardReport picard_run(const PicardConfig& cfg);

}  // namespace vvlab
