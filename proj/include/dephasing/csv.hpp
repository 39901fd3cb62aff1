#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dephasing/compare.hpp"
#include "dephasing/curve.hpp"

namespace dephasing {

/// 17 significant digits; round-trips any double exactly.
std::string format_full(double v);

using HeaderMeta = std::vector<std::pair<std::string, std::string>>;

/// Curves as CSV: '# key=value' provenance header, then one column per
/// series. Deterministic bit-for-bit (fixed formatting, LF endings).
std::string curve_family_csv(const CurveFamily& family, const HeaderMeta& header);

/// Compare report as CSV rows eta,sigma,t_over_tau_d,closed,oracle,
/// oracle_error,deviation,converged plus summary header lines.
std::string compare_report_csv(const CompareReport& report, const HeaderMeta& header);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace dephasing
