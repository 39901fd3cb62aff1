#include "dephasing/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "dephasing/constants.hpp"

namespace dephasing {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << what << " must be strictly positive and finite, got " << v;
    throw ParameterError(os.str());
  }
}

}  // namespace

void Material::validate() const {
  require_positive(mass_density, "material.rho_m");
  require_positive(sound_speed, "material.s");
  require_positive(deformation_constant, "material.D");
}

Material material_preset(const std::string& name) {
  // Registry of embedded presets. Si: rho_m = 2.33e3 kg/m^3, D = 8.6 eV,
  // s = 9e3 m/s (longitudinal acoustic branch).
  static const std::vector<Material> registry = {
      {2.33e3, 9.0e3, constants::ev_to_joule(8.6), "Si"},
  };
  const std::string key = lower(name);
  for (const auto& m : registry) {
    if (lower(m.name) == key) return m;
  }
  std::ostringstream os;
  os << "unknown material preset '" << name << "'; known presets:";
  for (const auto& m : registry) os << " " << m.name;
  throw LookupError(os.str());
}

std::vector<std::string> material_preset_names() { return {"Si"}; }

void Geometry::validate() const {
  require_positive(d, "geometry.d");
  require_positive(R_plus, "geometry.R_plus");
  require_positive(R_minus, "geometry.R_minus");
  if (R_plus >= d || R_minus >= d) {
    std::ostringstream os;
    os << "Bohr radii must be smaller than the donor separation "
          "(non-overlapping wavefunctions): R_plus="
       << R_plus << " m, R_minus=" << R_minus << " m, d=" << d << " m";
    throw ParameterError(os.str());
  }
}

double DerivedScales::gamma_T(double temperature) const {
  if (temperature < 0 || !std::isfinite(temperature)) {
    std::ostringstream os;
    os << "temperature must be >= 0 K, got " << temperature;
    throw ParameterError(os.str());
  }
  return temperature / T0 * omega_d;
}

DerivedScales derive_scales(const Material& material, const Geometry& geometry) {
  material.validate();
  geometry.validate();

  DerivedScales s;
  s.tau_d = geometry.d / material.sound_speed;
  s.omega_d = constants::two_pi / s.tau_d;
  s.eta_plus = geometry.eta(Site::plus);
  s.eta_minus = geometry.eta(Site::minus);
  s.eta = 0.5 * (s.eta_plus + s.eta_minus);
  s.sigma = (s.eta_plus - s.eta_minus) / s.eta;

  // k_B T0 = rho_m d^3 s^2 (hbar omega_d / D)^2. The ion mass inside d^3 is
  // rho_m d^3, which is the parameter-free reading of "cells times cell mass".
  const double d3 = geometry.d * geometry.d * geometry.d;
  const double ratio =
      constants::hbar * s.omega_d / material.deformation_constant;
  s.T0 = material.mass_density * d3 * material.sound_speed *
         material.sound_speed * ratio * ratio / constants::k_boltzmann;
  return s;
}

void InitialState::validate() const {
  const double mag = std::abs(xi);
  if (!(mag <= 1.0 + 1e-12) || !std::isfinite(mag)) {
    std::ostringstream os;
    os << "initial-state amplitude must satisfy |xi| <= 1, got |xi|=" << mag;
    throw ParameterError(os.str());
  }
}

std::complex<double> InitialState::coherence_prefactor() const {
  validate();
  const double mag2 = std::norm(xi);
  return std::conj(xi) * std::sqrt(std::max(0.0, 1.0 - mag2));
}

}  // namespace dephasing
