#pragma once

#include <complex>
#include <vector>

#include "dephasing/params.hpp"
#include "dephasing/quadrature.hpp"
#include "dephasing/rates.hpp"

namespace dephasing::oracle {

/// Wave vector in the axially symmetric problem: magnitude k and the cosine
/// of the angle to the inter-donor axis.
struct WaveVector {
  double k = 0;   // 1/m
  double mu = 0;  // cos(theta), in [-1, 1]
};

/// k-space evaluators built from material and geometry. The quantization
/// volume V is carried symbolically: quantities that scale like 1/sqrt(V)
/// are returned multiplied by sqrt(V), and it cancels identically in every
/// continuum-limit integral Sum_k -> V/(2 pi)^3 Int d^3k.
class SpectralKernel {
 public:
  SpectralKernel(const Material& material, const Geometry& geometry);

  /// F_a(k) = exp(+- i k.d/2) / [1 + (k R_a/2)^2]^2; F_a(0) = 1.
  std::complex<double> form_factor(const WaveVector& k, Site site) const;

  /// Real Lorentzian-squared envelope |F_a(k)|.
  double form_envelope(double k, Site site) const;

  /// F(k) = (F_+ + F_-)/2 and f(k) = F_+ - F_-.
  std::complex<double> site_mean_form(const WaveVector& k) const;
  std::complex<double> site_diff_form(const WaveVector& k) const;

  /// |kappa_k| sqrt(1/V) = (D/s) sqrt(hbar omega_k / (2 rho_m)), the screened
  /// ion-coupling magnitude in the long-wavelength limit. Units J m^{3/2}.
  double kappa_magnitude(double k) const;

  /// g_k sqrt(V) = i (D/(hbar s)) sqrt(hbar omega_k/(2 rho_m)) f(-k).
  /// Defined as 0 at k = 0 (limit). Units s^-1 m^{3/2}.
  std::complex<double> interaction_rate(const WaveVector& k) const;

  /// alpha_k sqrt(V) = g_k sqrt(V) / omega_k; 0 at k = 0.
  std::complex<double> displacement_amplitude(const WaveVector& k) const;

  /// beta_k sqrt(V) = -kappa_k F^*(k) sqrt(1/V) / (hbar omega_k). The sign
  /// follows from diagonalizing the identity-coupled phonon term with a
  /// Hermitian coupling (kappa odd under k -> -k).
  std::complex<double> displacement_shift(const WaveVector& k) const;

  const Material& material() const { return material_; }
  const Geometry& geometry() const { return geometry_; }

 private:
  Material material_;
  Geometry geometry_;
};

/// Deterministic panel grid plus the a-priori bound on the truncated tail.
struct PanelPlan {
  std::vector<double> edges;
  double tail_bound = 0;
};

/// Envelope of the dimensionless radial integrand (used for tail
/// truncation; exposed for validation).
double radial_envelope(double q, double eta_plus, double eta_minus);

/// The folded radial integrand itself, exposed for kernel-level checks
/// (it is odd under x -> -x, which is why the domain t >= 0 suffices).
double radial_integrand(double q, double x, double eta_plus, double eta_minus);

/// Panel plan for the radial spectral integral at dimensionless time x.
PanelPlan radial_plan(double x, double eta_plus, double eta_minus,
                      const QuadratureConfig& quad);

/// Dimensionless rate gamma/Gamma_T by adaptive quadrature of the radial
/// spectral integral (mode sum reduced over spherical angles), folded onto
/// q in [0, inf).
QuadResult gamma_hat_oracle_radial(double x, double eta_plus, double eta_minus,
                                   const QuadratureConfig& quad = {});

/// Same, in physical units (scaled by Gamma_T from the rate parameters).
QuadResult gamma_oracle_radial(double t, const rates::RateParams& p,
                               const QuadratureConfig& quad = {});

/// Independent reduction: 2D quadrature over (k, cos theta) of the spectral
/// rate (2 k_B T/hbar) V/(2 pi)^3 |alpha_k|^2 sin(omega_k t). Builds its
/// prefactor from raw material constants, so it cross-checks the whole
/// Gamma_T/T0 normalization chain as well as the angular reduction.
QuadResult gamma_oracle_3d(double t, const SpectralKernel& kernel,
                           double temperature, const QuadratureConfig& quad = {});

/// Slow phase phi(t) = Sum_k |alpha_k|^2 sin(omega_k t) in the continuum
/// limit. Temperature-independent.
QuadResult phase_phi(double t, const rates::RateParams& p,
                     const DerivedScales& scales,
                     const QuadratureConfig& quad = {});

/// d phi/dt at t = 0, by quadrature of the slope integral
/// Sum_k |alpha_k|^2 omega_k. Independent check of the small-t behaviour.
QuadResult phase_slope_at_zero(const rates::RateParams& p,
                               const DerivedScales& scales,
                               const QuadratureConfig& quad = {});

struct EnergyShiftResult {
  double value = 0;               // rad/s, real part
  double error = 0;               // quadrature error estimate
  double imaginary_residue = 0;   // |Im| of the raw integral, must be ~0
};

/// Phonon-induced shift of the electronic transition frequency,
/// -(1/(hbar V)) Sum_k kappa_k f(k) (beta_k + beta_{-k}^*), evaluated as a
/// 2D continuum quadrature. The result must be real; a significant
/// imaginary residue raises ConsistencyError.
EnergyShiftResult energy_shift(const Material& material,
                               const Geometry& geometry,
                               const QuadratureConfig& quad = {});

/// Dimensionless Int_0^t gamma dt' by kink-aware time quadrature of the
/// closed-form rate.
QuadResult integrate_rate(double t, const rates::RateParams& p,
                          const QuadratureConfig& quad = {});

}  // namespace dephasing::oracle
