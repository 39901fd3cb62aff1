#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dephasing/errors.hpp"

namespace dephasing {

/// Which of the two donor sites.
enum class Site { plus, minus };

/// Bulk host properties. All fields SI; the deformation constant is stored
/// in joule (config input is in eV and converted on load).
struct Material {
  double mass_density = 0;          // kg / m^3
  double sound_speed = 0;           // m / s
  double deformation_constant = 0;  // J
  std::string name = "custom";

  void validate() const;
};

/// Site registry lookup, case-insensitive. Throws LookupError listing the
/// known presets for unknown names.
Material material_preset(const std::string& name);
std::vector<std::string> material_preset_names();

/// Donor pair geometry: separation d and the two Bohr radii. The donor
/// wavefunctions must not overlap, so 0 < R_a < d.
struct Geometry {
  double d = 0;        // m
  double R_plus = 0;   // m
  double R_minus = 0;  // m

  void validate() const;
  double eta(Site a) const { return (a == Site::plus ? R_plus : R_minus) / d; }
};

/// Scale system every rate formula is expressed in:
///   tau_d   phonon transit time d/s between the donor sites
///   omega_d 2*pi/tau_d, frequency of a phonon with wavelength d
///   eta_a   relative Bohr radii R_a/d; eta their mean, sigma the relative
///           difference (eta_+ - eta_-)/eta
///   T0      temperature scale k_B T0 = rho_m d^3 s^2 (hbar omega_d / D)^2,
///           with rho_m d^3 the ion mass inside the volume d^3
struct DerivedScales {
  double tau_d = 0;      // s
  double omega_d = 0;    // rad / s
  double eta_plus = 0;
  double eta_minus = 0;
  double eta = 0;        // mean relative Bohr radius
  double sigma = 0;      // relative difference of relative Bohr radii
  double T0 = 0;         // K

  /// Temperature-proportional rate scale Gamma_T = (T/T0) omega_d.
  double gamma_T(double temperature) const;
};

DerivedScales derive_scales(const Material& material, const Geometry& geometry);

/// Electronic transition frequency bookkeeping: the bare donor-level
/// splitting plus the phonon-induced shift.
struct ElectronicLevels {
  double bare_splitting = 0;  // rad / s
  double shift = 0;           // rad / s
  double omega0 = 0;          // rad / s, = bare_splitting + shift

  static ElectronicLevels from_bare_and_shift(double bare, double shift) {
    return {bare, shift, bare + shift};
  }
};

/// Prepared superposition sqrt(1-|xi|^2)|g> + xi|e>.
struct InitialState {
  std::complex<double> xi{0.0, 0.0};

  void validate() const;
  /// Coherence prefactor xi^* sqrt(1-|xi|^2); magnitude is at most 1/2.
  std::complex<double> coherence_prefactor() const;
};

}  // namespace dephasing
