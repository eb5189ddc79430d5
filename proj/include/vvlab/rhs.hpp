#pragma once

#include <utility>

#include "vvlab/deriv.hpp"
#include "vvlab/params.hpp"
#include "vvlab/state.hpp"

namespace vvlab {

enum class Mode { Euler, NS, Linearized };

/// Derivative operators used by the right-hand sides: first derivatives
/// (advection, pressure gradient, source) and the viscous second derivative.
/// The viscous operator doubles as the implicit IMEX operator, so both paths
/// integrate the same semi-discrete system.
struct DiffOps {
  DiffOp advect{DiffKind::FD4};
  DiffOp viscous{DiffKind::FD2};
};

/// Optional forcing added to the symmetric-variable right-hand side
/// (manufactured-solution runs).
struct Forcing {
  virtual ~Forcing() = default;
  virtual void eval(double t, const Grid& g, Field& g_vphi, Field& g_phi,
                    Field& g_u) const = 0;
};

struct SymRhs {
  Field dvphi, dphi, du;
  explicit SymRhs(std::size_t n = 0) : dvphi(n, 0.0), dphi(n, 0.0), du(n, 0.0) {}
  void resize(std::size_t n) {
    dvphi.assign(n, 0.0);
    dphi.assign(n, 0.0);
    du.assign(n, 0.0);
  }
};

/// Transport right-hand side for the viscosity variable:
/// -(advector) d/dx f - coef * divider * d/dx(advector).
/// The nonlinear systems use advector = u and divider = vphi.
Field rhs_transport_vphi(const Grid& g, const Field& f, const Field& advector,
                         const Field& divider, const PhysParams& p, const DiffOps& ops);

/// Right-hand side of the symmetric block for W = (phi, u), already
/// multiplied by the inverse of the diagonal matrix A0:
///   Euler:       coefficients from the state itself, epsilon terms dropped.
///   NS:          coefficients from the state itself, eta = 0.
///   Linearized:  advection/pressure coefficients and the stress source from
///                the frozen triple (omega, psi, v) passed as `frozen`
///                (vphi = omega, phi = psi, u = v); the degenerate elliptic
///                coefficient epsilon*(vphi^2 + eta^2) uses the evolving vphi.
/// Returns (dphi/dt, du/dt).
std::pair<Field, Field> rhs_symmetric_W(const Grid& g, const SymState& state,
                                        const SymState* frozen, const PhysParams& p,
                                        Mode mode, double eta, const DiffOps& ops);

/// Full right-hand side of all three fields, with optional forcing and an
/// optional split of the stiff viscous term (`include_viscous = false` gives
/// the explicit part used by the IMEX integrator).
void eval_rhs(const Grid& g, const PhysParams& p, Mode mode, double eta,
              const SymState& state, const SymState* frozen, const DiffOps& ops,
              const Forcing* forcing, double t, SymRhs& out,
              bool include_viscous = true);

}  // namespace vvlab
