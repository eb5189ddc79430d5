#include "vvlab/sym_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vvlab/kernels.hpp"

namespace vvlab {

double coeff_a1(const PhysParams& p) {
  const double gm1 = p.gamma - 1.0;
  return gm1 * gm1 / (4.0 * p.A * p.gamma);
}

double coeff_a2(const PhysParams& p) { return std::min(1.0, coeff_a1(p)); }

namespace {
void check_dim(int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
}
}  // namespace

SmallMat assemble_A0(const PhysParams& p, int dim) {
  check_dim(dim);
  SmallMat m;
  m.n = dim + 1;
  m(0, 0) = 1.0;
  const double a1 = coeff_a1(p);
  for (int i = 1; i <= dim; ++i) m(i, i) = a1;
  return m;
}

SmallMat assemble_Aj(double phi, std::span<const double> u, const PhysParams& p,
                     int j, int dim) {
  check_dim(dim);
  if (j < 0 || j >= dim) throw std::invalid_argument("assemble_Aj: direction out of range");
  if (static_cast<int>(u.size()) != dim)
    throw std::invalid_argument("assemble_Aj: velocity size mismatch");
  SmallMat m;
  m.n = dim + 1;
  const double a1 = coeff_a1(p);
  const double offd = p.half_gamma() * phi;
  m(0, 0) = u[static_cast<std::size_t>(j)];
  m(0, 1 + j) = offd;
  m(1 + j, 0) = offd;
  for (int i = 1; i <= dim; ++i) m(i, i) = a1 * u[static_cast<std::size_t>(j)];
  return m;
}

std::vector<double> char_speeds(double phi, std::span<const double> u,
                                std::span<const double> l, const PhysParams& p) {
  const int dim = static_cast<int>(u.size());
  check_dim(dim);
  if (l.size() != u.size()) throw std::invalid_argument("char_speeds: direction size mismatch");
  double ul = 0.0;
  for (int i = 0; i < dim; ++i) ul += u[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(i)];
  const double c = std::sqrt(p.A * p.gamma) * phi;
  std::vector<double> speeds;
  speeds.reserve(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i < dim - 1; ++i) speeds.push_back(ul);
  speeds.push_back(ul - c);
  speeds.push_back(ul + c);
  std::sort(speeds.begin(), speeds.end());
  return speeds;
}

double max_char_speed(const SymState& w, const PhysParams& p) {
  const double c0 = std::sqrt(p.A * p.gamma);
  const double* u = w.u.data();
  const double* phi = w.phi.data();
  return kernels::max_indexed(w.u.size(), [u, phi, c0](std::size_t i) {
    return std::fabs(u[i]) + c0 * std::fabs(phi[i]);
  });
}

Field lame_L(const Grid& g, const Field& u, const PhysParams& p, DiffOp op) {
  Field out = deriv(g, u, 2, op);
  const double nu = p.lame_coeff();
  for (double& v : out) v *= -nu;
  return out;
}

Field stress_S(const Grid& g, const Field& u, const PhysParams& p, DiffOp op) {
  Field out = deriv(g, u, 1, op);
  const double nu = p.lame_coeff();
  for (double& v : out) v *= nu;
  return out;
}

Field source_Q(const Grid& g, const Field& u, const PhysParams& p, DiffOp op) {
  Field out = stress_S(g, u, p, op);
  const double q = p.q_factor();
  for (double& v : out) v *= q;
  return out;
}

Field grad_H(const Grid& g, const Field& vphi, DiffOp op) {
  Field sq(vphi.size());
  for (std::size_t i = 0; i < vphi.size(); ++i) sq[i] = vphi[i] * vphi[i];
  return deriv(g, sq, 1, op);
}

}  // namespace vvlab
