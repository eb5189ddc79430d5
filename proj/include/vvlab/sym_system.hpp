#pragma once

#include <array>
#include <span>
#include <vector>

#include "vvlab/deriv.hpp"
#include "vvlab/params.hpp"
#include "vvlab/state.hpp"

namespace vvlab {

/// Dense (dim+1) x (dim+1) matrix, dim <= 3. Small enough to live on the
/// stack; used only for the coefficient matrices of the symmetric system.
struct SmallMat {
  int n = 0;
  std::array<double, 16> a{};

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
};

/// a1 = (gamma-1)^2 / (4*A*gamma), the velocity-block weight of A0.
double coeff_a1(const PhysParams& p);
/// a2 = min{1, a1}, the positive-definiteness constant of A0.
double coeff_a2(const PhysParams& p);

/// A0 = diag(1, a1 * I_dim).
SmallMat assemble_A0(const PhysParams& p, int dim);

/// A_j evaluated at a point with sound-speed variable phi and velocity u:
/// [[u_j, ((gamma-1)/2) phi e_j], [((gamma-1)/2) phi e_j^T, a1 u_j I_dim]].
SmallMat assemble_Aj(double phi, std::span<const double> u, const PhysParams& p,
                     int j, int dim);

/// Characteristic speeds of the first-order part in direction l (unit
/// vector): u.l with multiplicity dim-1, and u.l +- sqrt(A*gamma)*phi.
/// Returned with multiplicity, size dim+1.
std::vector<double> char_speeds(double phi, std::span<const double> u,
                                std::span<const double> l, const PhysParams& p);

/// max over nodes of |u| + sqrt(A*gamma)*phi; the CFL speed bound.
double max_char_speed(const SymState& w, const PhysParams& p);

// 1D operator bundle.
/// L u = -(2*alpha + beta) u_xx.
Field lame_L(const Grid& g, const Field& u, const PhysParams& p, DiffOp op);
/// S(u) = (2*alpha + beta) u_x.
Field stress_S(const Grid& g, const Field& u, const PhysParams& p, DiffOp op);
/// Q(u) = delta/(delta-1) * S(u).
Field source_Q(const Grid& g, const Field& u, const PhysParams& p, DiffOp op);
/// grad H(vphi) = d/dx (vphi^2).
Field grad_H(const Grid& g, const Field& vphi, DiffOp op);

}  // namespace vvlab
