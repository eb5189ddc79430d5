#pragma once

#include <map>
#include <string>
#include <vector>

#include "vvlab/picard.hpp"
#include "vvlab/stepper.hpp"
#include "vvlab/sweep.hpp"

namespace vvlab {

/// Flat key = value configuration with [section] headers and '#' comments.
/// Keys are stored section-qualified ("run.t_end"). Unknown keys are
/// rejected when a config is turned into a typed configuration.
class ConfigMap {
 public:
  static ConfigMap parse(const std::string& text);
  static ConfigMap load(const std::string& path);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  /// Keys never consumed by any reader below; nonempty means a typo.
  std::vector<std::string> unknown_keys() const;

  const std::map<std::string, std::string>& raw() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

SimConfig sim_config_from(const ConfigMap& c);
SweepConfig sweep_config_from(const ConfigMap& c);
PicardConfig picard_config_from(const ConfigMap& c);
std::vector<double> eta_list_from(const ConfigMap& c);

/// Documented sample configuration (the built-in defaults).
std::string default_config_text();

}  // namespace vvlab
