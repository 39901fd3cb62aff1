#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dephasing/constants.hpp"
#include "dephasing/params.hpp"

using namespace dephasing;
namespace cst = dephasing::constants;

namespace {
Geometry default_geometry() { return {10e-9, 1e-9, 1e-9}; }
}  // namespace

TEST_CASE("Si preset values") {
  const Material si = material_preset("Si");
  CHECK(si.mass_density == doctest::Approx(2.33e3).epsilon(1e-15));
  CHECK(si.sound_speed == doctest::Approx(9.0e3).epsilon(1e-15));
  CHECK(si.deformation_constant ==
        doctest::Approx(8.6 * cst::electron_volt).epsilon(1e-15));
  CHECK(si.name == "Si");
}

TEST_CASE("preset lookup is case-insensitive") {
  const Material a = material_preset("Si");
  const Material b = material_preset("si");
  const Material c = material_preset("SI");
  CHECK(a.mass_density == b.mass_density);
  CHECK(a.deformation_constant == c.deformation_constant);
}

TEST_CASE("unknown preset raises a lookup error listing known names") {
  try {
    material_preset("GaAs");
    FAIL("expected LookupError");
  } catch (const LookupError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("GaAs") != std::string::npos);
    CHECK(msg.find("Si") != std::string::npos);
  }
}

TEST_CASE("eV/J conversion round-trips to 1e-12") {
  for (double ev : {1.0, 8.6, 0.001, 123.456}) {
    const double back = cst::joule_to_ev(cst::ev_to_joule(ev));
    CHECK(std::abs(back - ev) <= 1e-12 * ev);
  }
}

TEST_CASE("derived scales for the Si preset at d = 10 nm") {
  const Material si = material_preset("Si");
  const DerivedScales s = derive_scales(si, default_geometry());

  // tau_d = d/s, about 1.11 ps
  CHECK(s.tau_d == doctest::Approx(10e-9 / 9.0e3).epsilon(1e-15));
  CHECK(s.tau_d >= 1.0e-12);
  CHECK(s.tau_d <= 1.2e-12);

  // omega_d tau_d = 2 pi to machine precision
  CHECK(std::abs(s.omega_d * s.tau_d - cst::two_pi) <= 8 * 1e-16 * cst::two_pi);

  // T0 by direct arithmetic on the defining identity, written out here as an
  // independent transcription of k_B T0 = rho_m d^3 s^2 (hbar omega_d / D)^2
  const double d = 10e-9, snd = 9.0e3, rho = 2.33e3;
  const double D = 8.6 * 1.602176634e-19;
  const double omega_d = 2.0 * cst::pi * snd / d;
  const double kT0 =
      rho * d * d * d * snd * snd * std::pow(1.054571817e-34 * omega_d / D, 2);
  const double T0_ref = kT0 / 1.380649e-23;
  CHECK(s.T0 == doctest::Approx(T0_ref).epsilon(1e-12));
  CHECK(s.T0 >= 1e3);
  CHECK(s.T0 <= 1e4);
  CHECK(s.T0 == doctest::Approx(2.6e3).epsilon(0.03));

  // eta bookkeeping
  CHECK(s.eta_plus == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(s.eta_minus == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(s.eta == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(s.sigma == 0.0);
}

TEST_CASE("eta and sigma for unequal radii") {
  const Material si = material_preset("Si");
  const DerivedScales s = derive_scales(si, {10e-9, 1.5e-9, 0.5e-9});
  CHECK(s.eta_plus == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(s.eta_minus == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(s.eta == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(s.sigma == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("temperature rate scale Gamma_T") {
  const Material si = material_preset("Si");
  const DerivedScales s = derive_scales(si, default_geometry());

  CHECK(s.gamma_T(0.0) == 0.0);
  CHECK(s.gamma_T(s.T0) == doctest::Approx(s.omega_d).epsilon(1e-14));

  // linear in T
  for (double T : {1.0, 77.0, 300.0}) {
    CHECK(s.gamma_T(2.0 * T) == doctest::Approx(2.0 * s.gamma_T(T)).epsilon(1e-14));
  }

  // 300 K cross-checked against independent arithmetic
  const double expected = 300.0 / s.T0 * (cst::two_pi * 9.0e3 / 10e-9);
  CHECK(s.gamma_T(300.0) == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(s.gamma_T(-1.0), ParameterError);
}

TEST_CASE("T0 scales linearly with d for a fixed material") {
  // rho d^3 s^2 (hbar omega_d/D)^2 with omega_d = 2 pi s/d leaves one power
  // of d.
  const Material si = material_preset("Si");
  const double T0_ref = derive_scales(si, default_geometry()).T0;
  for (double lambda : {0.5, 2.0, 7.5}) {
    const Geometry g{10e-9 * lambda, 1e-9, 1e-9};
    const double T0 = derive_scales(si, g).T0;
    CHECK(T0 == doctest::Approx(lambda * T0_ref).epsilon(1e-10));
  }
}

TEST_CASE("parameter domain errors") {
  const Material si = material_preset("Si");
  CHECK_THROWS_AS(derive_scales({-1.0, 9e3, 1e-18}, default_geometry()),
                  ParameterError);
  CHECK_THROWS_AS(derive_scales({2.33e3, 0.0, 1e-18}, default_geometry()),
                  ParameterError);
  CHECK_THROWS_AS(derive_scales(si, {0.0, 1e-9, 1e-9}), ParameterError);
  CHECK_THROWS_AS(derive_scales(si, {10e-9, 12e-9, 1e-9}), ParameterError);
  CHECK_THROWS_AS(derive_scales(si, {10e-9, 1e-9, -1e-9}), ParameterError);
}

TEST_CASE("electronic levels identity") {
  const auto levels = ElectronicLevels::from_bare_and_shift(5.0e12, -1.3e10);
  CHECK(levels.omega0 == levels.bare_splitting + levels.shift);
}

TEST_CASE("initial state invariants") {
  InitialState s;
  s.xi = {0.6, 0.3};
  CHECK_NOTHROW(s.validate());
  // |xi^* sqrt(1-|xi|^2)| <= 1/2 across the unit disk
  for (double m : {0.0, 0.2, 0.5, 1.0 / std::sqrt(2.0), 0.9, 1.0}) {
    InitialState t;
    t.xi = {m, 0.0};
    CHECK(std::abs(t.coherence_prefactor()) <= 0.5 + 1e-12);
  }
  InitialState bad;
  bad.xi = {1.2, 0.0};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}
