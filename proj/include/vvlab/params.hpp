#pragma once

#include <string>
#include <vector>

namespace vvlab {

/// Physical and numerical constants of the model.
///
/// Pressure law p = A rho^gamma, viscosities mu = epsilon*alpha*rho^delta and
/// lambda = epsilon*beta*rho^delta. epsilon scales the whole viscous part;
/// eta is the artificial uniform-ellipticity level used by the linearized
/// solver (eta = 0 is the target problem).
struct PhysParams {
  double A = 1.0;
  double gamma = 2.0;
  double delta = 2.0;
  double alpha = 1.0;
  double beta = 0.0;
  double epsilon = 0.01;
  double eta = 0.0;

  /// (gamma-1)/2: symmetrization exponent of the sound-speed variable.
  double half_gamma() const { return 0.5 * (gamma - 1.0); }
  /// (delta-1)/2: symmetrization exponent of the viscosity variable.
  double half_delta() const { return 0.5 * (delta - 1.0); }
  /// Effective 1D viscosity 2*alpha + beta (positive under the constraints).
  double lame_coeff() const { return 2.0 * alpha + beta; }
  /// delta/(delta-1): factor in front of the stress in the source term.
  double q_factor() const { return delta / (delta - 1.0); }
  /// 2*A*gamma/(gamma-1): pressure-gradient coefficient of the u-equation.
  double pressure_coeff() const { return 2.0 * A * gamma / (gamma - 1.0); }
};

/// Returns the list of violated parameter constraints; empty means valid.
std::vector<std::string> validate_params(const PhysParams& p);

bool params_valid(const PhysParams& p);

/// Throws std::invalid_argument listing all violations if p is invalid.
void require_valid(const PhysParams& p);

}  // namespace vvlab
