#pragma once

#include "vvlab/diagnostics.hpp"
#include "vvlab/rhs.hpp"

namespace vvlab {

/// Manufactured smooth periodic solution with strictly positive density,
/// used for order-of-accuracy verification. Requires gamma == delta so that
/// both density powers coincide and the forcing stays in closed form.
///
///   phi*(t,x) = phi_bar + a_phi sin(w (x - c_phi t))
///   u*(t,x)   =           a_u   sin(w (x - c_u t)),   w = 2 pi mode / L.
class MmsSolution : public Forcing {
 public:
  MmsSolution(const PhysParams& p, double phi_bar = 1.5, double a_phi = 0.2,
              double c_phi = 0.3, double a_u = 0.3, double c_u = 0.7, int mode = 1);

  const PhysParams& params() const { return p_; }

  /// Exact state sampled on the grid.
  SymState exact(double t, const Grid& g) const;

  /// Forcing for the symmetric-variable system making the exact fields an
  /// exact solution.
  void eval(double t, const Grid& g, Field& g_vphi, Field& g_phi,
            Field& g_u) const override;

  /// Matching forcing of the primitive-form equations (mass, momentum).
  PrimForcing primitive_forcing() const;

 private:
  PhysParams p_;
  double phi_bar_, a_phi_, c_phi_, a_u_, c_u_;
  int mode_;
};

}  // namespace vvlab
