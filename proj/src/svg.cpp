#include "dephasing/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dephasing/errors.hpp"

namespace dephasing {

namespace {

constexpr double kWidth = 820;
constexpr double kHeight = 540;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

const char* kPalette[] = {"#c0392b", "#27ae60", "#2980b9", "#8e44ad",
                          "#d35400", "#16a085"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string curve_family_svg(const CurveFamily& family, const std::string& title) {
  family.validate();
  if (family.series.empty() || family.abscissa.empty())
    throw ParameterError("cannot plot an empty curve family");

  double xmin = family.abscissa.front(), xmax = family.abscissa.back();
  double ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& c : family.series) {
    for (double v : c.values) {
      if (!std::isfinite(v)) throw ParameterError("cannot plot non-finite values");
      if (first) { ymin = ymax = v; first = false; }
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (ymax == ymin) { ymax += 1.0; ymin -= 1.0; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto X = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  const auto Y = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // frame and ticks
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int nticks = 5;
  for (int i = 0; i <= nticks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / nticks;
    const double fy = ymin + (ymax - ymin) * i / nticks;
    os << "<line x1=\"" << X(fx) << "\" y1=\"" << kTop + ph << "\" x2=\"" << X(fx)
       << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << X(fx) << "\" y=\"" << kTop + ph + 20
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fx) << "</text>\n";
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << Y(fy) << "\" x2=\"" << kLeft
       << "\" y2=\"" << Y(fy) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << Y(fy) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fy) << "</text>\n";
  }
  if (ymin < 0 && ymax > 0) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << Y(0) << "\" x2=\"" << kLeft + pw
       << "\" y2=\"" << Y(0) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,4\"/>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << family.abscissa_label << "</text>\n";
  os << "<text x=\"18\" y=\"" << kTop + ph / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 18 " << kTop + ph / 2 << ")\">"
     << family.quantity << "</text>\n";

  for (std::size_t s = 0; s < family.series.size(); ++s) {
    const auto& c = family.series[s];
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[s % 6]
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < family.abscissa.size(); ++i)
      os << fmt(X(family.abscissa[i])) << "," << fmt(Y(c.values[i])) << " ";
    os << "\"/>\n";
    const double ly = kTop + 16 + 18 * static_cast<double>(s);
    os << "<line x1=\"" << kLeft + pw - 150 << "\" y1=\"" << ly << "\" x2=\""
       << kLeft + pw - 120 << "\" y2=\"" << ly << "\" stroke=\"" << kPalette[s % 6]
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kLeft + pw - 114 << "\" y=\"" << ly + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << c.label
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dephasing
