#include "vvlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vvlab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "params.A", "params.gamma", "params.delta", "params.alpha", "params.beta",
      "params.epsilon", "params.eta",
      "grid.length", "grid.n",
      "run.t_end", "run.cfl_hyp", "run.cfl_par", "run.integrator", "run.mode",
      "run.frames", "run.blowup_factor",
      "init.kind", "init.amp", "init.center", "init.radius", "init.power",
      "init.u_amp", "init.u_center", "init.u_radius", "init.u_power",
      "init.base", "init.width", "init.phibar", "init.pert", "init.mode",
      "sweep.epsilons", "sweep.threads",
      "picard.iterations", "picard.start", "picard.eps_scaled_diffusion",
      "picard.compare_points", "picard.frames",
      "eta.list",
  };
  return keys;
}

}  // namespace

ConfigMap ConfigMap::parse(const std::string& text) {
  ConfigMap c;
  std::istringstream is(text);
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: malformed section at line " +
                                    std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " +
                                  std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config: empty key at line " + std::to_string(lineno));
    if (!section.empty()) key = section + "." + key;
    c.kv_[key] = value;
  }
  return c;
}

ConfigMap ConfigMap::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string ConfigMap::get(const std::string& key, const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": " + it->second);
  }
}

int ConfigMap::get_int(const std::string& key, int fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for " + key + ": " + it->second);
  }
}

std::vector<double> ConfigMap::get_list(const std::string& key,
                                        const std::vector<double>& fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad list entry for " + key + ": " + item);
    }
  }
  return out;
}

std::vector<std::string> ConfigMap::unknown_keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : kv_)
    if (!known_keys().count(k)) out.push_back(k);
  return out;
}

namespace {

void reject_unknown(const ConfigMap& c) {
  auto bad = c.unknown_keys();
  if (bad.empty()) return;
  std::string msg = "config: unknown keys:";
  for (const auto& k : bad) msg += " " + k;
  throw std::invalid_argument(msg);
}

}  // namespace

SimConfig sim_config_from(const ConfigMap& c) {
  reject_unknown(c);
  SimConfig cfg;
  cfg.params.A = c.get_double("params.A", cfg.params.A);
  cfg.params.gamma = c.get_double("params.gamma", cfg.params.gamma);
  cfg.params.delta = c.get_double("params.delta", cfg.params.delta);
  cfg.params.alpha = c.get_double("params.alpha", cfg.params.alpha);
  cfg.params.beta = c.get_double("params.beta", cfg.params.beta);
  cfg.params.epsilon = c.get_double("params.epsilon", cfg.params.epsilon);
  cfg.params.eta = c.get_double("params.eta", cfg.params.eta);

  cfg.grid = Grid(c.get_double("grid.length", 1.0),
                  static_cast<std::size_t>(c.get_int("grid.n", 512)));

  cfg.t_end = c.get_double("run.t_end", cfg.t_end);
  cfg.cfl_hyp = c.get_double("run.cfl_hyp", cfg.cfl_hyp);
  cfg.cfl_par = c.get_double("run.cfl_par", cfg.cfl_par);
  cfg.blowup_factor = c.get_double("run.blowup_factor", cfg.blowup_factor);
  cfg.n_frames = static_cast<std::size_t>(c.get_int("run.frames", 20));

  const std::string integ = c.get("run.integrator", "ssp-rk3");
  if (integ == "ssp-rk3")
    cfg.integrator = Integrator::SspRk3;
  else if (integ == "imex")
    cfg.integrator = Integrator::ImexArs222;
  else
    throw std::invalid_argument("config: unknown integrator " + integ);

  const std::string mode = c.get("run.mode", "ns");
  if (mode == "ns")
    cfg.mode = Mode::NS;
  else if (mode == "euler")
    cfg.mode = Mode::Euler;
  else
    throw std::invalid_argument("config: unknown run mode " + mode);

  cfg.initial = InitialData::named(c.get("init.kind", "bump"));
  cfg.initial.amp = c.get_double("init.amp", cfg.initial.amp);
  cfg.initial.center = c.get_double("init.center", cfg.initial.center);
  cfg.initial.radius = c.get_double("init.radius", cfg.initial.radius);
  cfg.initial.power = c.get_int("init.power", cfg.initial.power);
  cfg.initial.u_amp = c.get_double("init.u_amp", cfg.initial.u_amp);
  cfg.initial.u_center = c.get_double("init.u_center", cfg.initial.u_center);
  cfg.initial.u_radius = c.get_double("init.u_radius", cfg.initial.u_radius);
  cfg.initial.u_power = c.get_int("init.u_power", cfg.initial.u_power);
  cfg.initial.base = c.get_double("init.base", cfg.initial.base);
  cfg.initial.width = c.get_double("init.width", cfg.initial.width);
  cfg.initial.phibar = c.get_double("init.phibar", cfg.initial.phibar);
  cfg.initial.pert = c.get_double("init.pert", cfg.initial.pert);
  cfg.initial.mode = c.get_int("init.mode", cfg.initial.mode);
  return cfg;
}

SweepConfig sweep_config_from(const ConfigMap& c) {
  SweepConfig s;
  s.base = sim_config_from(c);
  s.epsilons = c.get_list("sweep.epsilons", s.epsilons);
  s.threads = c.get_int("sweep.threads", s.threads);
  return s;
}

PicardConfig picard_config_from(const ConfigMap& c) {
  PicardConfig p;
  p.base = sim_config_from(c);
  p.base.t_end = c.get_double("run.t_end", 0.02);
  p.base.n_frames = static_cast<std::size_t>(c.get_int("picard.frames", 200));
  p.iterations = c.get_int("picard.iterations", p.iterations);
  const std::string start = c.get("picard.start", "warm");
  if (start == "warm")
    p.start = PicardConfig::Start::Warm;
  else if (start == "constant")
    p.start = PicardConfig::Start::Constant;
  else
    throw std::invalid_argument("config: unknown picard start " + start);
  p.eps_scaled_diffusion = c.get_int("picard.eps_scaled_diffusion", 0) != 0;
  p.compare_points =
      static_cast<std::size_t>(c.get_int("picard.compare_points", 50));
  return p;
}

std::vector<double> eta_list_from(const ConfigMap& c) {
  return c.get_list("eta.list", {1e-1, 1e-2, 1e-3, 1e-4});
}

std::string default_config_text() {
  return R"(# Model constants
[params]
A = 1.0
gamma = 2.0
delta = 2.0
alpha = 1.0
beta = 0.0
epsilon = 0.01
eta = 0.0

[grid]
length = 1.0
n = 512

[run]
t_end = 0.05
cfl_hyp = 0.4
cfl_par = 0.25
integrator = ssp-rk3   # ssp-rk3 | imex
mode = ns              # ns | euler
frames = 20
blowup_factor = 1000.0

[init]
kind = bump            # bump | gauss | acoustic | zero
amp = 0.2
center = 0.5
radius = 0.35
power = 4
u_amp = 0.08
u_center = 0.5
u_radius = 0.2
u_power = 4

[sweep]
epsilons = 1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4
threads = 1

[picard]
iterations = 6
start = warm           # warm | constant
eps_scaled_diffusion = 0
compare_points = 50
frames = 200

[eta]
list = 1e-1, 1e-2, 1e-3, 1e-4
)";
}

}  // namespace vvlab
