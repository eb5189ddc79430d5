#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "vvlab/grid.hpp"
#include "vvlab/params.hpp"

namespace vvlab {

/// Primitive variables: density (>= 0) and velocity on a common grid.
struct PrimState {
  Grid grid;
  Field rho;
  Field u;
};

/// Symmetrized variables: vphi = rho^((delta-1)/2), phi = rho^((gamma-1)/2),
/// and the velocity. Both density powers are >= 0 nodewise.
struct SymState {
  Grid grid;
  Field vphi;
  Field phi;
  Field u;

  SymState() = default;
  explicit SymState(const Grid& g)
      : grid(g), vphi(g.n, 0.0), phi(g.n, 0.0), u(g.n, 0.0) {}
};

struct NegativeDensityError : std::runtime_error {
  std::size_t node;
  explicit NegativeDensityError(std::size_t i)
      : std::runtime_error("negative density at node " + std::to_string(i)), node(i) {}
};

/// Throws NegativeDensityError (with the first offending node) on rho < 0.
SymState to_symmetric(const PrimState& s, const PhysParams& p);

/// rho = phi^(2/(gamma-1)); exact at phi = 0.
PrimState to_primitive(const SymState& w, const PhysParams& p);

Field pressure(const Grid& g, const Field& rho, const PhysParams& p);
std::pair<Field, Field> viscosities(const Grid& g, const Field& rho, const PhysParams& p);

/// c = sqrt(A*gamma) * phi nodewise.
Field sound_speed(const SymState& w, const PhysParams& p);

/// Checks nonnegativity of both density powers and the mutual consistency
/// vphi = phi^((delta-1)/(gamma-1)). On failure returns false and, if `why`
/// is given, a short description.
///
/// neg_tol is an absolute allowance for transport undershoot at a vacuum
/// interface (values around -1e-32 can appear there); the state itself is
/// never clamped. The consistency test skips nodes where phi sits below
/// 1e-10 of its maximum, where the relative comparison is pure rounding.
bool check_sym_invariants(const SymState& w, const PhysParams& p,
                          double rel_tol = 1e-9, std::string* why = nullptr,
                          double neg_tol = 0.0);

}  // namespace vvlab
