#pragma once

#include <vector>

#include "dephasing/quadrature.hpp"

namespace dephasing {

/// Grid for the closed-form vs oracle sweep. Defaults match the standing
/// validation grid: (eta, sigma) in {0.05, 0.08, 0.1} x {0, 0.1, 0.5, 1.0},
/// 300 times in [0, 3] tau_d.
struct CompareGrid {
  std::vector<double> etas{0.05, 0.08, 0.1};
  std::vector<double> sigmas{0.0, 0.1, 0.5, 1.0};
  int points = 300;
  double x_max = 3.0;

  void validate() const;
};

struct CompareRow {
  double eta = 0;
  double sigma = 0;
  double x = 0;            // t / tau_d
  double closed = 0;       // closed-form gamma/Gamma_T
  double oracle = 0;       // radial quadrature gamma/Gamma_T
  double oracle_error = 0; // quadrature error estimate
  double deviation = 0;    // |closed - oracle| / max_t |oracle| of the curve
  bool converged = true;
};

struct CompareReport {
  CompareGrid grid;
  double tolerance = 1e-6;
  std::vector<CompareRow> rows;
  double max_deviation = 0;
  bool all_converged = true;
  bool pass = false;  // max_deviation <= tolerance and all points converged
  double elapsed_seconds = 0;
};

/// Evaluate the closed form and the radial oracle over the grid. Oracle
/// non-convergence is recorded per point (flagged row); the report is
/// produced either way.
CompareReport run_compare(const CompareGrid& grid, double tolerance,
                          const QuadratureConfig& quad = {});

}  // namespace dephasing
