#include "dephasing/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dephasing/constants.hpp"

namespace dephasing::rates {

using constants::pi;
using constants::two_pi;

void RateParams::validate() const {
  const auto in_unit = [](double e) { return e > 0 && e < 1; };
  if (!in_unit(eta_plus) || !in_unit(eta_minus)) {
    std::ostringstream os;
    os << "relative Bohr radii must lie in (0, 1): eta_plus=" << eta_plus
       << ", eta_minus=" << eta_minus;
    throw ParameterError(os.str());
  }
  if (!(tau_d > 0) || !(Gamma_T >= 0))
    throw ParameterError("tau_d must be positive and Gamma_T non-negative");
  if (!(degeneracy_threshold > 0) || !(degeneracy_threshold < 1e-2))
    throw ParameterError("degeneracy threshold must lie in (0, 1e-2)");
}

RateParams RateParams::for_temperature(const DerivedScales& scales,
                                       double temperature) {
  RateParams p;
  p.eta_plus = scales.eta_plus;
  p.eta_minus = scales.eta_minus;
  p.tau_d = scales.tau_d;
  p.Gamma_T = scales.gamma_T(temperature);
  p.validate();
  return p;
}

RateParams params_from_eta_sigma(double eta, double sigma, double tau_d,
                                 double Gamma_T) {
  RateParams p;
  p.eta_plus = eta * (1.0 + 0.5 * sigma);
  p.eta_minus = eta * (1.0 - 0.5 * sigma);
  p.tau_d = tau_d;
  p.Gamma_T = Gamma_T;
  p.validate();
  return p;
}

double peak_kernel_A(double x) {
  const double poly = 1.25 + x * (2.5 + x * (2.0 + x * (2.0 / 3.0)));
  return pi * (1.25 - poly * std::exp(-2.0 * x));
}

double peak_kernel_B(double x) {
  const double poly = 1.0 + x * (11.0 / 8.0 + x * (0.75 + x / 6.0));
  return pi * poly * std::exp(-2.0 * x);
}

namespace {

void require_nonnegative_time(double t) {
  if (t < 0 || !std::isfinite(t))
    throw ParameterError("time must be non-negative and finite");
}

// Shared limit check for the two-pole term. The closed form divides by
// eta_a^2 - eta_b^2.
bool pair_degenerate(const RateParams& p) {
  const double em = p.eta_mean();
  return std::abs(p.eta_plus * p.eta_plus - p.eta_minus * p.eta_minus) <=
         p.degeneracy_threshold * em * em;
}

}  // namespace

double gamma_ab_hat(double x, double eta_a, double eta_b) {
  // Three terms: the short-time peak (phonon crossing site a), and the two
  // pole contributions at |1 +- x| (phonon arriving from the other site).
  // At x = 0 the last two cancel exactly.
  const double z = x / eta_a;
  const double term1 = z * (0.25 + z * (0.5 + z / 3.0)) * std::exp(-2.0 * z);

  const double a2 = eta_a * eta_a;
  const double b2 = eta_b * eta_b;
  const double denom = a2 - b2;
  const double r = a2 / denom;
  const double c = 0.5 * eta_a * (a2 - 5.0 * b2) / denom;

  const double u = 1.0 + x;
  const double v = std::abs(1.0 - x);
  const double term2 = r * r * (u + c) * std::exp(-2.0 * u / eta_a);
  const double term3 = -r * r * (v + c) * std::exp(-2.0 * v / eta_a);

  return (term1 + term2 + term3) / a2;
}

double gamma0_hat(double x, double eta) {
  const double z = x / eta;
  const double term1 = z * (0.5 + z * (1.0 + z * (2.0 / 3.0))) * std::exp(-2.0 * z);

  const auto bracket = [](double w) {
    return 5.0 / 16.0 + w * (5.0 / 8.0 + w * (0.5 + w / 6.0));
  };
  const double u = (1.0 + x) / eta;
  const double v = std::abs(1.0 - x) / eta;
  const double cross =
      eta * (bracket(u) * std::exp(-2.0 * u) - bracket(v) * std::exp(-2.0 * v));

  return (term1 + cross) / (eta * eta);
}

double gamma_hat(double x, const RateParams& p) {
  p.validate();
  if (std::abs(p.sigma()) < p.degeneracy_threshold)
    return gamma0_hat(x, p.eta_mean());
  return gamma_ab_hat(x, p.eta_plus, p.eta_minus) +
         gamma_ab_hat(x, p.eta_minus, p.eta_plus);
}

double ln_G0(double x, const RateParams& p) {
  p.validate();
  if (x < 0 || !std::isfinite(x))
    throw ParameterError("dimensionless time must be non-negative and finite");
  const double eta = p.eta_mean();
  const double ie = 1.0 / eta;
  double core = ie * peak_kernel_A(x * ie) + peak_kernel_B(ie) -
                peak_kernel_B((1.0 + x) * ie);
  if (x <= 1.0) {
    core += peak_kernel_B(ie) - peak_kernel_B((1.0 - x) * ie);
  } else {
    core += peak_kernel_B(ie) + peak_kernel_B((x - 1.0) * ie) -
            2.0 * peak_kernel_B(0.0);
  }
  return -core;
}

QuadResult integrate_gamma_hat(double x, const RateParams& p,
                               const QuadratureConfig& quad) {
  p.validate();
  if (x < 0 || !std::isfinite(x))
    throw ParameterError("dimensionless time must be non-negative and finite");
  if (x == 0.0) return {0.0, 0.0};

  // Panels: resolve the short-time peak near eta and split at the kink x = 1.
  std::vector<double> edges{0.0};
  const double peak_edge = 8.0 * p.eta_mean();
  if (peak_edge < x && peak_edge < 1.0) edges.push_back(peak_edge);
  if (x > 1.0) edges.push_back(1.0);
  edges.push_back(x);

  const auto f = [&](double xp) { return gamma_hat(xp, p); };
  QuadratureConfig cfg = quad;
  cfg.validate();
  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const QuadResult r = detail::panel_refine(
        f, edges[i], edges[i + 1],
        std::max(cfg.abs_floor, cfg.rel_tol) * (edges[i + 1] - edges[i]) /
            (edges.back() - edges.front()),
        cfg.max_subdivisions);
    total += r.value;
    err += r.error;
  }
  const double target = std::max(cfg.abs_floor, cfg.rel_tol * std::abs(total));
  if (err > target && err > 1e2 * target) {
    std::ostringstream os;
    os << "time integral of the rate did not converge: error " << err;
    throw QuadratureError(os.str(), total, err, target);
  }
  return {total, err};
}

double log_decay_profile(double x, const RateParams& p,
                         const QuadratureConfig& quad) {
  if (std::abs(p.sigma()) < p.degeneracy_threshold) return ln_G0(x, p);
  return -two_pi * integrate_gamma_hat(x, p, quad).value;
}

double gamma_ab(double t, SitePair pair, const RateParams& p) {
  p.validate();
  require_nonnegative_time(t);
  if (pair_degenerate(p)) {
    std::ostringstream os;
    os << "two-pole term is singular for |eta_+^2 - eta_-^2| <= "
       << p.degeneracy_threshold << " * eta^2 (sigma=" << p.sigma()
       << "); use gamma(), which switches to the equal-radii branch";
    throw DegeneracyError(os.str());
  }
  const double x = t / p.tau_d;
  if (pair == SitePair::plus_minus)
    return p.Gamma_T * gamma_ab_hat(x, p.eta_plus, p.eta_minus);
  return p.Gamma_T * gamma_ab_hat(x, p.eta_minus, p.eta_plus);
}

double gamma(double t, const RateParams& p) {
  require_nonnegative_time(t);
  return p.Gamma_T * gamma_hat(t / p.tau_d, p);
}

double gamma0(double t, const RateParams& p) {
  p.validate();
  require_nonnegative_time(t);
  return p.Gamma_T * gamma0_hat(t / p.tau_d, p.eta_mean());
}

double decay(double t, double temperature, const RateParams& p,
             const DerivedScales& scales, const QuadratureConfig& quad) {
  require_nonnegative_time(t);
  if (temperature < 0)
    throw ParameterError("temperature must be >= 0 K");
  if (t == 0.0) return 1.0;
  // g(t) = exp[(T/T0) ln G0(x)]; the profile is T-independent, so the
  // temperature scaling law holds to rounding by construction.
  const double profile = log_decay_profile(t / p.tau_d, p, quad);
  return std::exp(temperature / scales.T0 * profile);
}

std::complex<double> coherence_element(
    double t, double temperature, const InitialState& state,
    const ElectronicLevels& levels, const RateParams& p,
    const DerivedScales& scales, const std::function<double(double)>& phase,
    const QuadratureConfig& quad) {
  const std::complex<double> prefactor = state.coherence_prefactor();
  if (prefactor == std::complex<double>(0.0, 0.0)) return prefactor;
  const double phi = phase ? phase(t) : 0.0;
  const std::complex<double> rotation =
      std::exp(std::complex<double>(0.0, levels.omega0 * t - phi));
  return prefactor * rotation * decay(t, temperature, p, scales, quad);
}

double mean_rate(const RateParams& p, const DerivedScales& scales,
                 double temperature, const QuadratureConfig& quad) {
  if (!(temperature > 0))
    throw ParameterError("mean rate requires temperature > 0 K");
  // gamma_bar tau_d = Gamma_T tau_d Int_0^1 gamma_hat = 2 pi (T/T0) Int.
  return scales.gamma_T(temperature) * integrate_gamma_hat(1.0, p, quad).value;
}

CoherenceTime coherence_time(const RateParams& p, const DerivedScales& scales,
                             double temperature, CoherenceTimeMethod method,
                             const QuadratureConfig& quad) {
  p.validate();
  if (temperature < 0) throw ParameterError("temperature must be >= 0 K");
  CoherenceTime result;
  if (temperature == 0.0) {
    // Vanishing decoherence at T = 0; the mean rate is proportional to T.
    result.tau_c = std::numeric_limits<double>::infinity();
    result.note = "T = 0: coherence time is infinite";
    return result;
  }
  if (method == CoherenceTimeMethod::numeric) {
    result.tau_c = 1.0 / mean_rate(p, scales, temperature, quad);
    return result;
  }
  const double eta = p.eta_mean();
  result.tau_c = 4.0 / (5.0 * pi) * eta * p.tau_d * scales.T0 / temperature;
  if (p.sigma() != 0.0 || eta > 0.2) {
    result.applicability_warning = true;
    std::ostringstream os;
    os << "asymptotic formula assumes equal radii and eta << 1 (sigma="
       << p.sigma() << ", eta=" << eta << ")";
    result.note = os.str();
  }
  return result;
}

}  // namespace dephasing::rates
