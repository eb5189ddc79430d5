#pragma once

#include <functional>
#include <vector>

#include "vvlab/stepper.hpp"

namespace vvlab {

/// Monitored functional
///   J(t) = ||phi||_3^2 + ||vphi||_2^2 + eps |vphi|_{D3}^2 + ||u||_2^2
///        + |u|_{D3}^2 + int_0^t eps |vphi d^4 u|_2^2 ds
/// (discrete norms, spectral derivatives).
struct AprioriRecord {
  double t = 0;
  double phi_h3_sq = 0, vphi_h2_sq = 0, eps_vphi_d3_sq = 0;
  double u_h2_sq = 0, u_d3_sq = 0;
  double time_integral = 0;
  double total = 0;
};

/// J without the accumulated time integral.
double apriori_state_value(const SymState& w, const PhysParams& p);
/// Integrand of the time-integral term: eps |vphi d^4 u|_2^2.
double apriori_dissipation_rate(const SymState& w, const PhysParams& p);

std::vector<AprioriRecord> apriori_series(const Trajectory& traj, const PhysParams& p);
double apriori_sup(const std::vector<AprioriRecord>& series);

/// Terms of the zero-order energy identity of the self-coupled systems:
///   d/dt E + D = T + S,  E = int W^T A0 W,
///   D = 2 a1 eps alpha |sqrt(vphi^2+eta^2) u_x|^2
///     + 2 a1 eps (alpha+beta) |sqrt(vphi^2+eta^2) u_x|^2  (1D),
///   T = int W^T divA(W) W,   S = the stress source and commutator terms.
struct EnergyTerms {
  double energy = 0, dissipation = 0, transport = 0, source = 0;
};
EnergyTerms energy_terms(const SymState& w, const PhysParams& p, double eta,
                         const DiffOps& ops, Mode mode = Mode::NS);
/// Residual of the identity over one interval, normalized by the largest
/// participating term magnitude (0 when everything vanishes).
double energy_interval_residual(const EnergyTerms& a, const EnergyTerms& b, double dt);

struct EnergyBalance {
  std::vector<double> t_mid;
  std::vector<double> residual;  // normalized per-interval residuals
  double max_residual = 0;
};
/// The epsilon terms follow the trajectory's recorded mode (dropped for
/// inviscid runs).
EnergyBalance energy_balance(const Trajectory& traj, const PhysParams& p,
                             const DiffOps& ops);

/// Condition-(C) residual: max over vacuum-masked nodes (rho < rho_tol) of
/// |u_t + u u_x|, u_t by centered differencing of adjacent frames.
/// interior_scale is max over unmasked nodes of |u_t| for normalization.
struct VacuumResidual {
  bool applicable = false;
  std::vector<double> t;
  std::vector<double> value;
  double max_value = 0;
  double interior_scale = 0;
};
VacuumResidual vacuum_residual(const Trajectory& traj, const PhysParams& p,
                               double rho_tol = 1e-10,
                               const DiffOps& ops = DiffOps{});

/// Residuals of the primitive-form equations computed from the mapped
/// trajectory with discrete derivatives (spectral in space, centered frame
/// differences in time), masked to rho > rho_tol. The optional forcing
/// callback supplies (mass, momentum) forcing fields for manufactured runs.
using PrimForcing = std::function<void(double t, const Grid& g, Field& f_mass, Field& f_mom)>;
struct ResidualSeries {
  std::vector<double> t;
  std::vector<double> mass;
  std::vector<double> momentum;
  double max_mass = 0;
  double max_momentum = 0;
};
ResidualSeries primitive_residual(const Trajectory& traj, const PhysParams& p,
                                  double rho_tol = 1e-10,
                                  const PrimForcing* forcing = nullptr);

/// Distances between linearized solutions at consecutive regularization
/// levels, identical data and frozen coefficients. eta_list must be strictly
/// decreasing with at least 3 entries.
struct EtaStudy {
  std::vector<double> etas;
  std::vector<double> distance;  // size etas.size() - 1
  bool monotone = false;
};
EtaStudy eta_limit_study(const SymState& initial, const FrozenCoeffs& coeffs,
                         const std::vector<double>& eta_list, const SimConfig& cfg);

/// sup over shared frame times of the L2 distance of (phi, u) between two
/// trajectories on the same grid.
double sup_l2_distance(const Trajectory& a, const Trajectory& b, std::size_t n_samples = 0);

}  // namespace vvlab
