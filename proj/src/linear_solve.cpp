#include "vvlab/linear_solve.hpp"

#include <stdexcept>
#include <vector>

namespace vvlab {

namespace {

// In-place Thomas algorithm on copies; no pivoting.
void thomas(std::vector<double>& low, std::vector<double>& diag, std::vector<double>& up,
            std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double w = low[i] / diag[i - 1];
    diag[i] -= w * up[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - up[i] * rhs[i + 1]) / diag[i];
}

}  // namespace

void solve_cyclic_tridiagonal(std::span<const double> low, std::span<const double> diag,
                              std::span<const double> up, std::span<const double> rhs,
                              std::span<double> out) {
  const std::size_t n = diag.size();
  if (low.size() != n || up.size() != n || rhs.size() != n || out.size() != n)
    throw std::invalid_argument("solve_cyclic_tridiagonal: size mismatch");
  if (n < 3) throw std::invalid_argument("solve_cyclic_tridiagonal: need n >= 3");

  const double corner_low = low[0];   // M(0, n-1)
  const double corner_up = up[n - 1]; // M(n-1, 0)
  if (corner_low == 0.0 && corner_up == 0.0) {
    std::vector<double> l(low.begin(), low.end()), d(diag.begin(), diag.end()),
        u(up.begin(), up.end()), r(rhs.begin(), rhs.end());
    thomas(l, d, u, r);
    for (std::size_t i = 0; i < n; ++i) out[i] = r[i];
    return;
  }

  // M = T + q v^T with q = (ghat, 0, ..., 0, corner_up)^T,
  // v = (1, 0, ..., 0, corner_low/ghat)^T.
  const double ghat = -diag[0];
  std::vector<double> d(diag.begin(), diag.end());
  d[0] -= ghat;
  d[n - 1] -= corner_up * corner_low / ghat;

  std::vector<double> l(low.begin(), low.end()), u(up.begin(), up.end());
  l[0] = 0.0;
  u[n - 1] = 0.0;

  std::vector<double> z(rhs.begin(), rhs.end());
  {
    auto dl = l;
    auto dd = d;
    auto du = u;
    thomas(dl, dd, du, z);
  }
  std::vector<double> q(n, 0.0);
  q[0] = ghat;
  q[n - 1] = corner_up;
  std::vector<double> w = q;
  {
    auto dl = l;
    auto dd = d;
    auto du = u;
    thomas(dl, dd, du, w);
  }
  const double vz = z[0] + corner_low / ghat * z[n - 1];
  const double vw = w[0] + corner_low / ghat * w[n - 1];
  const double factor = vz / (1.0 + vw);
  for (std::size_t i = 0; i < n; ++i) out[i] = z[i] - factor * w[i];
}

}  // namespace vvlab
