#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dephasing/params.hpp"
#include "dephasing/quadrature.hpp"

namespace dephasing {

/// One resolved parameter with the source that supplied it
/// ("preset:Si", "default", "file:<path>", "flag").
struct ResolvedEntry {
  std::string key;
  std::string value;   // in config units (nm, eV, K)
  std::string source;
};

/// Fully validated parameter set for a run, with per-field provenance.
struct RunConfig {
  Material material;
  Geometry geometry;
  double temperature = 300.0;  // K
  std::vector<ResolvedEntry> provenance;
};

/// Name of the environment variable that may point at a default config file.
inline const char* config_env_var() { return "PHONON_DEPHASING_CONFIG"; }

/// Keys accepted in config files and as flag overrides, with their units:
///   material.rho_m (kg/m^3), material.s (m/s), material.D_eV (eV),
///   geometry.d_nm, geometry.R_plus_nm, geometry.R_minus_nm (nm),
///   temperature.K (K).
std::vector<std::string> config_keys();

/// Parse a key = value config file (# comments, blank lines allowed).
/// Unknown keys or non-numeric values raise ConfigError naming the key.
std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path);

/// Resolve preset -> file -> flags (later sources win), convert units and
/// validate. `config_path` empty means: use the file named by
/// PHONON_DEPHASING_CONFIG if set, else no file.
RunConfig load_run_config(
    const std::string& preset_name = "Si", const std::string& config_path = "",
    const std::vector<std::pair<std::string, std::string>>& flag_overrides = {});

}  // namespace dephasing
