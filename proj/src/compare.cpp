#include "dephasing/compare.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "dephasing/curve.hpp"
#include "dephasing/oracle.hpp"
#include "dephasing/rates.hpp"

namespace dephasing {

void CompareGrid::validate() const {
  if (etas.empty() || sigmas.empty())
    throw ParameterError("compare grid must name at least one eta and one sigma");
  if (points < 2) throw ParameterError("compare grid needs at least two points");
  if (!(x_max > 0)) throw ParameterError("compare grid needs x_max > 0");
  for (double e : etas)
    if (!(e > 0 && e < 1)) throw ParameterError("compare grid eta outside (0, 1)");
  for (double s : sigmas)
    if (!(s >= 0 && s < 2)) throw ParameterError("compare grid sigma outside [0, 2)");
}

CompareReport run_compare(const CompareGrid& grid, double tolerance,
                          const QuadratureConfig& quad) {
  grid.validate();
  if (!(tolerance > 0)) throw ParameterError("compare tolerance must be positive");

  const auto t0 = std::chrono::steady_clock::now();
  CompareReport report;
  report.grid = grid;
  report.tolerance = tolerance;

  const std::vector<double> xs = linspace(0.0, grid.x_max, grid.points);
  for (double eta : grid.etas) {
    for (double sigma : grid.sigmas) {
      const rates::RateParams p = rates::params_from_eta_sigma(eta, sigma);
      std::vector<CompareRow> curve_rows;
      curve_rows.reserve(xs.size());
      double oracle_scale = 0.0;
      for (double x : xs) {
        CompareRow row;
        row.eta = eta;
        row.sigma = sigma;
        row.x = x;
        row.closed = rates::gamma_hat(x, p);
        try {
          const QuadResult r =
              oracle::gamma_hat_oracle_radial(x, p.eta_plus, p.eta_minus, quad);
          row.oracle = r.value;
          row.oracle_error = r.error;
        } catch (const QuadratureError& e) {
          row.oracle = e.value;
          row.oracle_error = e.achieved_error;
          row.converged = false;
          report.all_converged = false;
        }
        oracle_scale = std::max(oracle_scale, std::abs(row.oracle));
        curve_rows.push_back(row);
      }
      // Deviations are normalized by the curve's peak oracle value: the rate
      // crosses zero, so a pointwise quotient would be ill-posed there.
      for (CompareRow& row : curve_rows) {
        row.deviation = std::abs(row.closed - row.oracle) / oracle_scale;
        if (row.converged)
          report.max_deviation = std::max(report.max_deviation, row.deviation);
        report.rows.push_back(row);
      }
    }
  }
  report.pass = report.all_converged && report.max_deviation <= tolerance;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace dephasing
