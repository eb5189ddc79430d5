#pragma once

#include <span>

namespace vvlab {

/// Solves the cyclic tridiagonal system M y = rhs where row i of M is
/// [low[i], diag[i], up[i]] with periodic wrap (low[0] couples node 0 to
/// node n-1, up[n-1] couples node n-1 to node 0). Thomas elimination plus a
/// rank-one Sherman-Morrison correction; valid for the diagonally dominant
/// systems produced by the implicit viscous operator.
void solve_cyclic_tridiagonal(std::span<const double> low, std::span<const double> diag,
                              std::span<const double> up, std::span<const double> rhs,
                              std::span<double> out);

}  // namespace vvlab
