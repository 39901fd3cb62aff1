#include "dephasing/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "dephasing/constants.hpp"

namespace dephasing {

namespace {

const std::vector<std::string> kKeys = {
    "material.rho_m",     "material.s",          "material.D_eV",
    "geometry.d_nm",      "geometry.R_plus_nm",  "geometry.R_minus_nm",
    "temperature.K"};

bool known_key(const std::string& key) {
  return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

double parse_number(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0')) {
    throw ConfigError("config key '" + key + "' has non-numeric value '" + text +
                      "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace

std::vector<std::string> config_keys() { return kKeys; }

std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << path << ":" << lineno << ": expected 'key = value', got '"
         << stripped << "'";
      throw ConfigError(os.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!known_key(key)) {
      std::ostringstream os;
      os << path << ":" << lineno << ": unknown config key '" << key
         << "'; known keys:";
      for (const auto& k : kKeys) os << " " << k;
      throw ConfigError(os.str());
    }
    parse_number(key, value);  // fail early, naming the key
    entries.emplace_back(key, value);
  }
  return entries;
}

RunConfig load_run_config(
    const std::string& preset_name, const std::string& config_path,
    const std::vector<std::pair<std::string, std::string>>& flag_overrides) {
  const Material preset = material_preset(preset_name);

  struct Slot {
    double value;
    std::string source;
  };
  std::map<std::string, Slot> slots;
  slots["material.rho_m"] = {preset.mass_density, "preset:" + preset.name};
  slots["material.s"] = {preset.sound_speed, "preset:" + preset.name};
  slots["material.D_eV"] = {constants::joule_to_ev(preset.deformation_constant),
                            "preset:" + preset.name};
  slots["geometry.d_nm"] = {10.0, "default"};
  slots["geometry.R_plus_nm"] = {1.0, "default"};
  slots["geometry.R_minus_nm"] = {1.0, "default"};
  slots["temperature.K"] = {300.0, "default"};

  std::string file_path = config_path;
  if (file_path.empty()) {
    if (const char* env = std::getenv(config_env_var())) file_path = env;
  }
  if (!file_path.empty()) {
    for (const auto& [key, value] : parse_config_file(file_path))
      slots[key] = {parse_number(key, value), "file:" + file_path};
  }
  for (const auto& [key, value] : flag_overrides) {
    if (!known_key(key)) {
      std::ostringstream os;
      os << "unknown override key '" << key << "'; known keys:";
      for (const auto& k : kKeys) os << " " << k;
      throw ConfigError(os.str());
    }
    slots[key] = {parse_number(key, value), "flag"};
  }

  RunConfig cfg;
  cfg.material.name = preset.name;
  cfg.material.mass_density = slots["material.rho_m"].value;
  cfg.material.sound_speed = slots["material.s"].value;
  cfg.material.deformation_constant =
      constants::ev_to_joule(slots["material.D_eV"].value);
  cfg.geometry.d = slots["geometry.d_nm"].value * constants::nm;
  cfg.geometry.R_plus = slots["geometry.R_plus_nm"].value * constants::nm;
  cfg.geometry.R_minus = slots["geometry.R_minus_nm"].value * constants::nm;
  cfg.temperature = slots["temperature.K"].value;

  cfg.material.validate();
  cfg.geometry.validate();
  if (cfg.temperature < 0)
    throw ParameterError("temperature.K must be >= 0");

  for (const auto& key : kKeys)
    cfg.provenance.push_back({key, format_value(slots[key].value), slots[key].source});
  return cfg;
}

}  // namespace dephasing
