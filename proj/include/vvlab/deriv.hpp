#pragma once

#include "vvlab/grid.hpp"

namespace vvlab {

enum class DiffKind { FD2, FD4, Spectral };

/// Periodic derivative operator. FD kinds are central stencils of the given
/// order of accuracy; Spectral differentiates exactly on resolved Fourier
/// modes (Nyquist is zeroed for odd derivative orders).
struct DiffOp {
  DiffKind kind = DiffKind::Spectral;

  int accuracy_order() const {
    switch (kind) {
      case DiffKind::FD2: return 2;
      case DiffKind::FD4: return 4;
      case DiffKind::Spectral: return 0;  // exact on resolved modes
    }
    return 0;
  }
};

/// k-th periodic derivative, 0 <= k <= 4. Throws on k > 4.
void deriv(const Grid& g, const Field& f, int k, DiffOp op, Field& out);
Field deriv(const Grid& g, const Field& f, int k, DiffOp op);

}  // namespace vvlab
