#pragma once

#include <string>

#include "dephasing/curve.hpp"

namespace dephasing {

/// Minimal self-contained line plot: axes, ticks, legend, one polyline per
/// series. No external resources.
std::string curve_family_svg(const CurveFamily& family, const std::string& title);

}  // namespace dephasing
