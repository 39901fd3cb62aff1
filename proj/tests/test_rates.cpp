#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "dephasing/constants.hpp"
#include "dephasing/curve.hpp"
#include "dephasing/params.hpp"
#include "dephasing/rates.hpp"

using namespace dephasing;
using namespace dephasing::rates;
namespace cst = dephasing::constants;

namespace {

DerivedScales si_scales() {
  return derive_scales(material_preset("Si"), {10e-9, 1e-9, 1e-9});
}

double max_abs_on_grid(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("peak kernels at the endpoints") {
  CHECK(peak_kernel_A(0.0) == 0.0);
  CHECK(peak_kernel_B(0.0) == cst::pi);
  CHECK(peak_kernel_A(50.0) == doctest::Approx(1.25 * cst::pi).epsilon(1e-14));
  CHECK(std::abs(peak_kernel_B(50.0)) < 1e-38);
}

TEST_CASE("A is monotone increasing (accumulates the positive peak)") {
  const int n = 2000;
  double prev = peak_kernel_A(0.0);
  for (int i = 1; i <= n; ++i) {
    const double x = 10.0 * i / n;
    const double cur = peak_kernel_A(x);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("two-pole term vanishes at t = 0 and at long times, per ordered pair") {
  for (double eta : {0.05, 0.1, 0.2}) {
    for (double sigma : {0.1, 0.5, 1.0}) {
      const RateParams p = params_from_eta_sigma(eta, sigma);
      CHECK(gamma_ab(0.0, SitePair::plus_minus, p) == 0.0);
      CHECK(gamma_ab(0.0, SitePair::minus_plus, p) == 0.0);
      CHECK(std::abs(gamma_ab(50.0 * p.tau_d, SitePair::plus_minus, p)) < 1e-6);
      CHECK(std::abs(gamma_ab(50.0 * p.tau_d, SitePair::minus_plus, p)) < 1e-6);
    }
  }
}

TEST_CASE("rate endpoints: gamma(0) = 0 and gamma decays at long times") {
  for (double eta : {0.05, 0.1, 0.2}) {
    for (double sigma : {0.0, 0.5, 1.0}) {
      const RateParams p = params_from_eta_sigma(eta, sigma);
      CHECK(std::abs(gamma_hat(0.0, p)) < 1e-10);
      CHECK(std::abs(gamma_hat(50.0, p)) < 1e-6);
    }
  }
}

TEST_CASE("gamma/Gamma_T is temperature independent") {
  const DerivedScales s = si_scales();
  const RateParams p1 = RateParams::for_temperature(s, 30.0);
  const RateParams p2 = RateParams::for_temperature(s, 300.0);
  for (double x : {0.03, 0.1, 0.9, 1.0, 1.7}) {
    const double t = x * s.tau_d;
    CHECK(gamma(t, p1) / p1.Gamma_T ==
          doctest::Approx(gamma(t, p2) / p2.Gamma_T).epsilon(1e-14));
  }
}

TEST_CASE("positive peak near eta_min tau_d, negative peak near tau_d") {
  for (double sigma : {0.1, 1.0}) {
    const double eta = 0.1;
    const RateParams p = params_from_eta_sigma(eta, sigma);
    const double eta_min = std::min(p.eta_plus, p.eta_minus);
    const auto xs = linspace(1e-4, 3.0, 6000);
    double best_max = 0, x_max = 0, best_min = 0, x_min = 0;
    for (double x : xs) {
      const double v = gamma_hat(x, p);
      if (v > best_max) { best_max = v; x_max = x; }
      if (v < best_min) { best_min = v; x_min = x; }
    }
    CHECK(best_max > 0);
    CHECK(best_min < 0);
    CHECK(x_max >= 0.5 * eta_min);
    CHECK(x_max <= 2.0 * eta_min);
    CHECK(std::abs(x_min - 1.0) <= 0.2);
  }
}

TEST_CASE("equal-radii rate is negative at t = tau_d (recoherence dip)") {
  const RateParams p = params_from_eta_sigma(0.1, 0.0);
  CHECK(gamma0(p.tau_d, p) < 0.0);
}

TEST_CASE("gamma approaches gamma0 quadratically in sigma") {
  const auto xs = linspace(0.0, 3.0, 121);
  const double eta = 0.1;
  std::vector<double> devs;
  for (double sigma : {1e-2, 5e-3}) {
    const RateParams p = params_from_eta_sigma(eta, sigma);
    double dev = 0;
    for (double x : xs)
      dev = std::max(dev, std::abs(gamma_hat(x, p) - gamma0_hat(x, eta)));
    devs.push_back(dev);
  }
  // halving sigma shrinks the worst deviation by about 4
  CHECK(devs[0] / devs[1] > 3.3);
  CHECK(devs[0] / devs[1] < 4.8);
}

TEST_CASE("degenerate radii: direct two-pole call refuses, gamma() switches") {
  const RateParams p = params_from_eta_sigma(0.1, 1e-5);
  CHECK_THROWS_AS(gamma_ab(0.5, SitePair::plus_minus, p), DegeneracyError);
  CHECK_NOTHROW(gamma(0.5 * p.tau_d, p));

  const auto xs = linspace(0.0, 3.0, 301);
  // continuity at the switch: with the threshold placed where the two-pole
  // branch is numerically clean, the jump is O(threshold^2); the measured
  // coefficient is ~26 for eta = 0.1
  const double thr = 1e-3;
  RateParams above = params_from_eta_sigma(0.1, 1.0001 * thr);
  above.degeneracy_threshold = thr;
  double dev = 0;
  for (double x : xs)
    dev = std::max(dev, std::abs(gamma_hat(x, above) - gamma0_hat(x, 0.1)));
  CHECK(dev <= 40.0 * thr * thr);

  // at the default threshold the two-pole branch already carries
  // ~eps/(4 sigma^3 eta) cancellation noise; the switch is what keeps
  // gamma() clean below it
  const RateParams noisy = params_from_eta_sigma(0.1, 1.0001e-4);
  double noise = 0;
  for (double x : xs)
    noise = std::max(noise, std::abs(gamma_hat(x, noisy) - gamma0_hat(x, 0.1)));
  CHECK(noise <= 2e-3);
}

TEST_CASE("ln G0 closed form against time integration of gamma0") {
  QuadratureConfig quad;
  quad.rel_tol = 1e-12;
  quad.abs_floor = 1e-14;
  for (double eta : {0.05, 0.1}) {
    const RateParams p = params_from_eta_sigma(eta, 0.0);
    CHECK(ln_G0(0.0, p) == 0.0);
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      const double numeric = -cst::two_pi * integrate_gamma_hat(x, p, quad).value;
      const double closed = ln_G0(x, p);
      CHECK(closed == doctest::Approx(numeric).epsilon(1e-8));
    }
  }
}

TEST_CASE("ln G0 long-time plateau matches the limit expression") {
  for (double eta : {0.05, 0.1}) {
    const RateParams p = params_from_eta_sigma(eta, 0.0);
    const double limit = -((1.25 * cst::pi) / eta + 2.0 * peak_kernel_B(1.0 / eta) -
                           2.0 * peak_kernel_B(0.0));
    CHECK(ln_G0(50.0, p) == doctest::Approx(limit).epsilon(1e-12));
  }
}

TEST_CASE("decay basics and temperature scaling law") {
  const DerivedScales s = si_scales();
  const RateParams p = RateParams::for_temperature(s, 300.0);
  CHECK(decay(0.0, 300.0, p, s) == 1.0);

  const double T1 = 0.1 * s.T0;
  const double T2 = 0.002 * s.T0;
  for (double x : {0.2, 0.8, 1.0, 1.4, 2.7}) {
    const double t = x * s.tau_d;
    const double g1 = decay(t, T1, p, s);
    const double g2 = decay(t, T2, p, s);
    CHECK(std::pow(g1, T2 / T1) == doctest::Approx(g2).epsilon(1e-10));
    CHECK(g1 > 0.0);
    CHECK(g1 <= 1.0);
    CHECK(g2 > 0.0);
    CHECK(g2 <= 1.0);
  }

  // scaling holds on the quadrature branch (sigma > 0) too
  const DerivedScales su = derive_scales(material_preset("Si"), {10e-9, 1.25e-9, 0.75e-9});
  const RateParams pu = RateParams::for_temperature(su, 300.0);
  for (double x : {0.5, 1.5}) {
    const double t = x * su.tau_d;
    const double g1 = decay(t, T1, pu, su);
    const double g2 = decay(t, T2, pu, su);
    CHECK(std::pow(g1, T2 / T1) == doctest::Approx(g2).epsilon(1e-10));
  }
}

TEST_CASE("decay dips and then recovers to a plateau") {
  const DerivedScales s = si_scales();
  const RateParams p = RateParams::for_temperature(s, 0.1 * s.T0);
  const auto xs = linspace(0.0, 3.0, 601);
  std::vector<double> g;
  for (double x : xs) g.push_back(decay(x * s.tau_d, 0.1 * s.T0, p, s));
  const auto it = std::min_element(g.begin(), g.end());
  const double x_min = xs[it - g.begin()];
  CHECK(x_min > 0.5);
  CHECK(x_min < 1.5);
  CHECK(g.front() > *it);
  CHECK(g.back() > *it);
}

TEST_CASE("coherence element prefactor and modulus") {
  const DerivedScales s = si_scales();
  const RateParams p = RateParams::for_temperature(s, 300.0);
  const auto levels = ElectronicLevels::from_bare_and_shift(3.0e12, 0.0);

  InitialState zero;
  zero.xi = {0.0, 0.0};
  InitialState full;
  full.xi = {1.0, 0.0};
  InitialState half;
  half.xi = {1.0 / std::sqrt(2.0), 0.0};

  const auto no_phase = [](double) { return 0.0; };
  CHECK(std::abs(coherence_element(1e-12, 300.0, zero, levels, p, s, no_phase)) ==
        0.0);
  CHECK(std::abs(coherence_element(1e-12, 300.0, full, levels, p, s, no_phase)) ==
        0.0);
  CHECK(std::abs(coherence_element(0.0, 300.0, half, levels, p, s, no_phase)) ==
        doctest::Approx(0.5).epsilon(1e-12));

  // modulus is phase-independent
  const double t = 0.7 * s.tau_d;
  const auto with_phase = [](double) { return 0.813; };
  const double m1 =
      std::abs(coherence_element(t, 300.0, half, levels, p, s, no_phase));
  const double m2 =
      std::abs(coherence_element(t, 300.0, half, levels, p, s, with_phase));
  CHECK(m1 == doctest::Approx(m2).epsilon(1e-13));
  CHECK(m1 == doctest::Approx(0.5 * decay(t, 300.0, p, s)).epsilon(1e-12));
}

TEST_CASE("mean rate is linear in T and ties to ln G0(1)") {
  const DerivedScales s = si_scales();
  const RateParams p = RateParams::for_temperature(s, 300.0);
  const double m1 = mean_rate(p, s, 150.0);
  const double m2 = mean_rate(p, s, 300.0);
  CHECK(m2 == doctest::Approx(2.0 * m1).epsilon(1e-12));

  // gamma_bar tau_d = (T/T0) (-ln G0(1)) for equal radii
  const double lhs = m2 * s.tau_d;
  const double rhs = (300.0 / s.T0) * (-ln_G0(1.0, p));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("coherence time: 1/T law, T = 0 sentinel, asymptotic accuracy") {
  const Material si = material_preset("Si");
  const Geometry tight{100e-9, 1e-9, 1e-9};  // eta = 0.01
  const DerivedScales s = derive_scales(si, tight);
  const RateParams p = RateParams::for_temperature(s, 300.0);

  const auto num300 = coherence_time(p, s, 300.0, CoherenceTimeMethod::numeric);
  const auto num30 = coherence_time(p, s, 30.0, CoherenceTimeMethod::numeric);
  CHECK(num30.tau_c == doctest::Approx(10.0 * num300.tau_c).epsilon(1e-10));
  const auto asym300 =
      coherence_time(p, s, 300.0, CoherenceTimeMethod::asymptotic);
  const auto asym30 = coherence_time(p, s, 30.0, CoherenceTimeMethod::asymptotic);
  CHECK(asym30.tau_c == doctest::Approx(10.0 * asym300.tau_c).epsilon(1e-12));

  // eta = 0.01, sigma = 0: the two methods agree within 10%
  CHECK(std::abs(num300.tau_c / asym300.tau_c - 1.0) < 0.10);
  CHECK_FALSE(asym300.applicability_warning);

  const auto frozen = coherence_time(p, s, 0.0, CoherenceTimeMethod::numeric);
  CHECK(std::isinf(frozen.tau_c));

  // warning outside the asymptotic regime
  const DerivedScales wide = derive_scales(si, {10e-9, 2.5e-9, 2.5e-9});
  const RateParams pw = RateParams::for_temperature(wide, 300.0);
  const auto warn = coherence_time(pw, wide, 300.0, CoherenceTimeMethod::asymptotic);
  CHECK(warn.applicability_warning);
  CHECK(!warn.note.empty());
}

TEST_CASE("rate params validation") {
  RateParams p;
  p.eta_plus = 1.2;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.degeneracy_threshold = 0.5;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = {};
  p.tau_d = -1.0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  CHECK_THROWS_AS(params_from_eta_sigma(0.6, 1.5), ParameterError);
  CHECK_THROWS_AS(gamma(-1.0, params_from_eta_sigma(0.1, 0.0)), ParameterError);
}

TEST_CASE("curve sampling: serial and parallel agree bitwise") {
  const RateParams p = params_from_eta_sigma(0.08, 0.5);
  const auto f = [&](double x) { return gamma_hat(x, p); };
  const auto xs = linspace(0.0, 3.0, 600);
  const auto a = sample_serial(f, xs);
  const auto b = sample_parallel(f, xs);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(max_abs_on_grid(a) > 0.0);
}
