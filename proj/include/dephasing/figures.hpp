#pragma once

#include <string>

#include "dephasing/curve.hpp"
#include "dephasing/quadrature.hpp"

namespace dephasing {

/// The three reference figures:
///   fig1  gamma/Gamma_T vs t/tau_d for eta = 0.1, sigma in {1.0, 0.5, 0.1}
///   fig2  gamma/Gamma_T vs t/tau_d for sigma = 0.1, eta in {0.1, 0.08, 0.05}
///   fig3  decay g(t) vs t/tau_d for eta = 0.1, sigma = 0,
///         T/T0 in {0.1, 0.02, 0.01, 0.002}
/// All three are dimensionless and material-independent.
enum class FigureId { fig1, fig2, fig3 };

FigureId figure_id_from_string(const std::string& name);
std::string to_string(FigureId id);

CurveFamily run_figure(FigureId id, int samples = 600, double x_max = 3.0);

}  // namespace dephasing
