// Timing of the OpenMP kernels against their serial reference: curve sweeps
// of the closed-form rate and the panel quadrature of the radial oracle.

#include <chrono>
#include <cstdio>
#include <functional>

#include "dephasing/curve.hpp"
#include "dephasing/oracle.hpp"
#include "dephasing/rates.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_seconds(const std::function<void()>& fn, int reps) {
  fn();  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.4f ms %10.4f ms %8.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial\n");
#endif
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  using namespace dephasing;
  const auto p = rates::params_from_eta_sigma(0.05, 0.5);
  const auto xs = linspace(0.0, 3.0, 20000);
  const auto f = [&](double x) { return rates::gamma_hat(x, p); };

  const double sweep_serial =
      time_seconds([&] { sample_serial(f, xs); }, 5);
  const double sweep_parallel =
      time_seconds([&] { sample_parallel(f, xs); }, 5);
  report("closed-form rate sweep (20k pts)", sweep_serial, sweep_parallel);

  QuadratureConfig serial_cfg;
  serial_cfg.parallel = false;
  QuadratureConfig parallel_cfg;
  const auto oracle_pass = [&](const QuadratureConfig& cfg) {
    for (double x : {0.05, 0.5, 1.0, 2.0})
      oracle::gamma_hat_oracle_radial(x, p.eta_plus, p.eta_minus, cfg);
  };
  const double oracle_serial = time_seconds([&] { oracle_pass(serial_cfg); }, 3);
  const double oracle_parallel = time_seconds([&] { oracle_pass(parallel_cfg); }, 3);
  report("radial oracle (4 times)", oracle_serial, oracle_parallel);

  const Material si = material_preset("Si");
  const Geometry geo{10e-9, 1.25e-9, 0.75e-9};
  const oracle::SpectralKernel kernel(si, geo);
  const auto scales = derive_scales(si, geo);
  (void)scales;
  const double shift_serial = time_seconds(
      [&] { oracle::energy_shift(si, geo, serial_cfg); }, 3);
  const double shift_parallel = time_seconds(
      [&] { oracle::energy_shift(si, geo, parallel_cfg); }, 3);
  report("energy shift quadrature", shift_serial, shift_parallel);

  const double g3d_serial = time_seconds(
      [&] { oracle::gamma_oracle_3d(0.5 * scales.tau_d, kernel, 300.0, serial_cfg); },
      1);
  const double g3d_parallel = time_seconds(
      [&] { oracle::gamma_oracle_3d(0.5 * scales.tau_d, kernel, 300.0, parallel_cfg); },
      1);
  report("3d oracle (one time)", g3d_serial, g3d_parallel);

  return 0;
}
