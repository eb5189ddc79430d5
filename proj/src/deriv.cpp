#include "vvlab/deriv.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "vvlab/fft.hpp"
#include "vvlab/kernels.hpp"

namespace vvlab {

namespace {

struct Stencil {
  std::array<double, 7> c;
  std::array<int, 7> off;
  int m;
};

// Central difference coefficients (Fornberg tables), unscaled by dx powers.
Stencil stencil_for(DiffKind kind, int k) {
  switch (kind) {
    case DiffKind::FD2:
      switch (k) {
        case 1: return {{-0.5, 0.5}, {-1, 1}, 2};
        case 2: return {{1.0, -2.0, 1.0}, {-1, 0, 1}, 3};
        case 3: return {{-0.5, 1.0, -1.0, 0.5}, {-2, -1, 1, 2}, 4};
        case 4: return {{1.0, -4.0, 6.0, -4.0, 1.0}, {-2, -1, 0, 1, 2}, 5};
      }
      break;
    case DiffKind::FD4:
      switch (k) {
        case 1:
          return {{1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12}, {-2, -1, 1, 2}, 4};
        case 2:
          return {{-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
                  {-2, -1, 0, 1, 2},
                  5};
        case 3:
          return {{1.0 / 8, -1.0, 13.0 / 8, -13.0 / 8, 1.0, -1.0 / 8},
                  {-3, -2, -1, 1, 2, 3},
                  6};
        case 4:
          return {{-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6},
                  {-3, -2, -1, 0, 1, 2, 3},
                  7};
      }
      break;
    case DiffKind::Spectral: break;
  }
  throw std::invalid_argument("deriv: unsupported stencil request");
}

void spectral_deriv(const Grid& g, const Field& f, int k, Field& out) {
  const std::size_t n = g.n;
  auto spec = fft::rfft(f);
  const double base = 2.0 * std::numbers::pi / g.length;
  const std::size_t kmax = spec.size() - 1;
  for (std::size_t j = 0; j <= kmax; ++j) {
    const double kappa = base * static_cast<double>(j);
    std::complex<double> mult(1.0, 0.0);
    const std::complex<double> ik(0.0, kappa);
    for (int m = 0; m < k; ++m) mult *= ik;
    spec[j] *= mult;
  }
  // Odd derivatives of the Nyquist mode are not representable on the grid.
  if (n % 2 == 0 && k % 2 == 1) spec[kmax] = 0.0;
  fft::irfft(spec.data(), n, out.data());
}

}  // namespace

void deriv(const Grid& g, const Field& f, int k, DiffOp op, Field& out) {
  if (f.size() != g.n) throw std::invalid_argument("deriv: field/grid size mismatch");
  if (k < 0 || k > 4)
    throw std::invalid_argument("deriv: derivative order must be in [0, 4]");
  out.resize(g.n);
  if (k == 0) {
    out = f;
    return;
  }
  if (op.kind == DiffKind::Spectral) {
    spectral_deriv(g, f, k, out);
    return;
  }
  Stencil s = stencil_for(op.kind, k);
  const double scale = 1.0 / std::pow(g.dx(), k);
  std::array<double, 7> c{};
  for (int i = 0; i < s.m; ++i) c[i] = s.c[i] * scale;
  kernels::apply_stencil_periodic(f.data(), out.data(), g.n, c.data(), s.off.data(), s.m);
}

Field deriv(const Grid& g, const Field& f, int k, DiffOp op) {
  Field out(g.n);
  deriv(g, f, k, op, out);
  return out;
}

}  // namespace vvlab
