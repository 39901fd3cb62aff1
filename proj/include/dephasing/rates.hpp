#pragma once

#include <complex>
#include <functional>
#include <string>

#include "dephasing/params.hpp"
#include "dephasing/quadrature.hpp"

namespace dephasing::rates {

/// Ordered donor-site pair (a, b) of the two-pole rate term.
enum class SitePair { plus_minus, minus_plus };

/// Everything the closed-form rate family needs: the two relative Bohr
/// radii, the phonon transit time and the temperature rate scale, plus the
/// switch point below which the equal-radii branch is used.
struct RateParams {
  double eta_plus = 0.1;
  double eta_minus = 0.1;
  double tau_d = 1.0;    // s
  double Gamma_T = 1.0;  // 1/s
  double degeneracy_threshold = 1e-4;

  double eta_mean() const { return 0.5 * (eta_plus + eta_minus); }
  double sigma() const { return (eta_plus - eta_minus) / eta_mean(); }
  void validate() const;

  static RateParams for_temperature(const DerivedScales& scales, double temperature);
};

/// Construct the relative radii from mean and relative difference:
/// eta_{+,-} = eta (1 +- sigma/2).
RateParams params_from_eta_sigma(double eta, double sigma, double tau_d = 1.0,
                                 double Gamma_T = 1.0);

/// Accumulated positive-peak kernel
/// A(x) = pi [5/4 - (2x^3/3 + 2x^2 + 5x/2 + 5/4) e^{-2x}].
double peak_kernel_A(double x);

/// Negative-peak kernel B(x) = pi (x^3/6 + 3x^2/4 + 11x/8 + 1) e^{-2x}.
double peak_kernel_B(double x);

// Dimensionless cores: gamma/Gamma_T as a function of x = t/tau_d. These are
// what the oracle comparisons and the figure sweeps use directly.
double gamma_ab_hat(double x, double eta_a, double eta_b);  // two-pole term
double gamma0_hat(double x, double eta);                    // equal radii
double gamma_hat(double x, const RateParams& p);            // branch-switching sum

/// log of the decay profile at T = T0 for equal radii, evaluated piecewise
/// exactly at the phonon-arrival kink x = 1.
double ln_G0(double x, const RateParams& p);

/// T-independent log-decay profile, any sigma: equals ln_G0 for equal radii
/// and -2*pi Int_0^x gamma_hat otherwise (adaptive, kink-aware quadrature).
double log_decay_profile(double x, const RateParams& p,
                         const QuadratureConfig& quad = {});

/// Dimensionless time integral Int_0^x gamma_hat(x') dx' of the closed form,
/// split at the kink x' = 1.
QuadResult integrate_gamma_hat(double x, const RateParams& p,
                               const QuadratureConfig& quad = {});

// Physical-unit operations.
double gamma_ab(double t, SitePair pair, const RateParams& p);  // 1/s
double gamma(double t, const RateParams& p);                    // 1/s
double gamma0(double t, const RateParams& p);                   // 1/s

/// Coherence decay factor g(t) = [G0(t/tau_d)]^{T/T0} in (0, 1].
double decay(double t, double temperature, const RateParams& p,
             const DerivedScales& scales, const QuadratureConfig& quad = {});

/// Off-diagonal density-matrix element
///   xi^* sqrt(1-|xi|^2) exp[i omega0 t - i phi(t)] g(t).
/// The slow phase phi(t) has no closed form and is supplied by the caller
/// (typically the oracle quadrature).
std::complex<double> coherence_element(
    double t, double temperature, const InitialState& state,
    const ElectronicLevels& levels, const RateParams& p,
    const DerivedScales& scales, const std::function<double(double)>& phase,
    const QuadratureConfig& quad = {});

/// Transient mean rate (1/tau_d) Int_0^{tau_d} gamma dt.
double mean_rate(const RateParams& p, const DerivedScales& scales,
                 double temperature, const QuadratureConfig& quad = {});

enum class CoherenceTimeMethod { asymptotic, numeric };

struct CoherenceTime {
  double tau_c = 0;  // s; +inf at T = 0
  bool applicability_warning = false;
  std::string note;
};

/// tau_c = 1/mean_rate (numeric) or (4/(5 pi)) (R/s) (T0/T) (asymptotic,
/// valid for equal radii and eta << 1; outside that regime the result keeps
/// a warning). T = 0 yields the infinity sentinel.
CoherenceTime coherence_time(const RateParams& p, const DerivedScales& scales,
                             double temperature, CoherenceTimeMethod method,
                             const QuadratureConfig& quad = {});

}  // namespace dephasing::rates
