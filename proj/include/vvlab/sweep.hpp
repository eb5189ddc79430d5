#pragma once

#include <array>
#include <string>
#include <vector>

#include "vvlab/diagnostics.hpp"
#include "vvlab/rate_fit.hpp"
#include "vvlab/stepper.hpp"

namespace vvlab {

/// Error norms evaluated by the vanishing-viscosity sweep, in column order.
inline constexpr std::array<const char*, 5> kSweepNorms = {"L2", "H1", "D2", "Hs1.5",
                                                           "Hs2.5"};

struct SweepConfig {
  SimConfig base;  // data, grid, horizon; mode is managed by the sweep
  std::vector<double> epsilons = {1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
  int threads = 1;
};

struct SweepRow {
  double epsilon = 0;
  std::array<double, 5> err{};  // sup over frames of the per-norm error
  double sup_apriori = 0;
  bool ok = false;
  std::string failure;
};

struct SweepResult {
  std::vector<SweepRow> rows;   // ordered as the epsilon list
  std::vector<RateFit> fits;    // one per norm, fitted over the ok rows
  std::array<bool, 5> monotone{};  // error nonincreasing in epsilon columnwise
  double apriori_ratio = 0;     // max/min of sup_t J over the ok rows
};

/// Runs the viscous system once per epsilon against a shared inviscid
/// reference from the same data, measuring sup-over-frames error norms of
/// (phi^eps - phi, u^eps - u). Members run concurrently up to
/// SweepConfig::threads; results are merged in epsilon order.
/// Throws std::invalid_argument when the epsilon list is invalid and
/// std::runtime_error when fewer than 3 members survive.
SweepResult sweep(const SweepConfig& cfg);

}  // namespace vvlab
