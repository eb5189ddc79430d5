#pragma once

#include <string>

#include "vvlab/grid.hpp"
#include "vvlab/params.hpp"
#include "vvlab/state.hpp"

namespace vvlab {

/// Named initial-data generators.
///
///  bump      phi0 = amp * (1 - ((x-center)/radius)^2)_+^power, compactly
///            supported with vacuum outside; vphi0 is the matching density
///            power; u0 a bump supported inside the density support.
///            power >= 4 keeps the interface smooth enough for the
///            third-derivative functionals.
///  gauss     rho0 = base + amp * exp(-((x-center)/width)^2): strictly
///            positive density, used for consistency and manufactured runs.
///  acoustic  phi0 = phibar + pert * sin(2 pi mode x / L), u0 = 0.
///  zero      the zero state.
struct InitialData {
  enum class Kind { Bump, Gauss, Acoustic, Zero } kind = Kind::Bump;

  double amp = 0.2;
  double center = 0.5;
  double radius = 0.35;
  int power = 4;
  double u_amp = 0.08;
  double u_center = 0.5;
  double u_radius = 0.2;
  int u_power = 4;

  double base = 0.5;
  double width = 0.1;

  double phibar = 1.0;
  double pert = 1e-3;
  int mode = 1;

  static InitialData named(const std::string& name);
};

SymState build_initial(const Grid& g, const PhysParams& p, const InitialData& d);

}  // namespace vvlab
