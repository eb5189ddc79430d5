#include "vvlab/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vvlab {

std::vector<std::string> validate_params(const PhysParams& p) {
  std::vector<std::string> v;
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(p.A) || !finite(p.gamma) || !finite(p.delta) || !finite(p.alpha) ||
      !finite(p.beta) || !finite(p.epsilon) || !finite(p.eta)) {
    v.push_back("all parameters must be finite");
    return v;
  }
  if (!(p.A > 0.0)) v.push_back("A > 0 fails");
  if (!(p.gamma > 1.0)) v.push_back("gamma > 1 fails");
  if (!(p.alpha > 0.0)) v.push_back("alpha > 0 fails");
  if (!(2.0 * p.alpha + 3.0 * p.beta >= 0.0)) v.push_back("2*alpha + 3*beta >= 0 fails");
  const double m = std::min(p.delta, p.gamma);
  if (!(m > 1.0 && m <= 3.0)) v.push_back("1 < min{delta, gamma} <= 3 fails");
  if (!(p.epsilon > 0.0 && p.epsilon <= 1.0)) v.push_back("epsilon in (0, 1] fails");
  if (!(p.eta >= 0.0 && p.eta <= 1.0)) v.push_back("eta in [0, 1] fails");
  return v;
}

bool params_valid(const PhysParams& p) { return validate_params(p).empty(); }

void require_valid(const PhysParams& p) {
  auto v = validate_params(p);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid parameters:";
  for (const auto& s : v) os << " [" << s << "]";
  throw std::invalid_argument(os.str());
}

}  // namespace vvlab
