#pragma once

#include <limits>

#include "vvlab/deriv.hpp"
#include "vvlab/grid.hpp"

namespace vvlab {

/// Discrete norm selector.
///
///  Lp            (integral |f|^p dx)^(1/p), p = inf gives the max norm.
///  SobolevInt    H^s, s integer <= 3: sqrt(sum_{j<=s} |d^j f|_2^2).
///  SobolevFrac   H^s' for real s' in [0, 3]: spectral definition whose
///                multiplier reproduces SobolevInt exactly at integer orders.
///  HomogeneousK  D^{k,r}: |d^k f|_r, k <= 4.
struct NormSpec {
  enum class Kind { Lp, SobolevInt, SobolevFrac, HomogeneousK } kind = Kind::Lp;
  double p = 2.0;       // Lp exponent, or the companion exponent r for D^{k,r}
  int s = 0;            // integer Sobolev order
  double s_frac = 0.0;  // fractional Sobolev order
  int k = 0;            // homogeneous derivative count

  static NormSpec lp(double p) { return {Kind::Lp, p, 0, 0.0, 0}; }
  static NormSpec linf() { return lp(std::numeric_limits<double>::infinity()); }
  static NormSpec hs(int s) { return {Kind::SobolevInt, 2.0, s, 0.0, 0}; }
  static NormSpec hs_frac(double s) { return {Kind::SobolevFrac, 2.0, 0, s, 0}; }
  static NormSpec dk(int k, double r = 2.0) { return {Kind::HomogeneousK, r, 0, 0.0, k}; }
};

/// integral of f over the periodic box (rectangle rule, exact for constants).
double quadrature(const Grid& g, const Field& f);

double lp_norm(const Grid& g, const Field& f, double p);
double l2_norm(const Grid& g, const Field& f);

/// Spectral Sobolev multiplier M_s(kappa) = sum_{j=0..s} kappa^{2j}
/// continued to real s through the closed geometric-sum form.
double sobolev_multiplier(double s, double kappa);

double norm(const Grid& g, const Field& f, const NormSpec& spec,
            DiffOp op = {DiffKind::Spectral});

}  // namespace vvlab
