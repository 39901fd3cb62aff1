#include "dephasing/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dephasing/errors.hpp"

namespace dephasing {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void emit_header(std::ostringstream& os, const HeaderMeta& header) {
  for (const auto& [key, value] : header) os << "# " << key << "=" << value << "\n";
}

}  // namespace

std::string curve_family_csv(const CurveFamily& family, const HeaderMeta& header) {
  family.validate();
  std::ostringstream os;
  emit_header(os, header);
  os << "# quantity=" << family.quantity << "\n";
  for (const auto& [key, value] : family.meta) os << "# " << key << "=" << value << "\n";
  for (const auto& c : family.series)
    for (const auto& [key, value] : c.meta)
      os << "# series." << c.label << "." << key << "=" << value << "\n";

  os << family.abscissa_label;
  for (const auto& c : family.series) os << "," << c.label;
  os << "\n";
  for (std::size_t i = 0; i < family.abscissa.size(); ++i) {
    os << format_full(family.abscissa[i]);
    for (const auto& c : family.series) os << "," << format_full(c.values[i]);
    os << "\n";
  }
  return os.str();
}

std::string compare_report_csv(const CompareReport& report, const HeaderMeta& header) {
  std::ostringstream os;
  emit_header(os, header);
  os << "# tolerance=" << format_full(report.tolerance) << "\n";
  os << "# max_deviation=" << format_full(report.max_deviation) << "\n";
  os << "# all_converged=" << (report.all_converged ? "true" : "false") << "\n";
  os << "# pass=" << (report.pass ? "true" : "false") << "\n";
  os << "eta,sigma,t_over_tau_d,closed,oracle,oracle_error,deviation,converged\n";
  for (const auto& row : report.rows) {
    os << format_full(row.eta) << "," << format_full(row.sigma) << ","
       << format_full(row.x) << "," << format_full(row.closed) << ","
       << format_full(row.oracle) << "," << format_full(row.oracle_error) << ","
       << format_full(row.deviation) << "," << (row.converged ? "1" : "0")
       << "\n";
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);  // LF endings as written
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

}  // namespace dephasing
