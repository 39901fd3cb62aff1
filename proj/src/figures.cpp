#include "dephasing/figures.hpp"

#include <cmath>
#include <sstream>

#include "dephasing/rates.hpp"

namespace dephasing {

FigureId figure_id_from_string(const std::string& name) {
  if (name == "fig1") return FigureId::fig1;
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig3") return FigureId::fig3;
  throw LookupError("unknown figure id '" + name + "'; known ids: fig1 fig2 fig3");
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
  }
  return "?";
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Curve rate_curve(const std::vector<double>& xs, double eta, double sigma) {
  const rates::RateParams p = rates::params_from_eta_sigma(eta, sigma);
  Curve c;
  c.abscissa = xs;
  c.values = sample_parallel([&](double x) { return rates::gamma_hat(x, p); }, xs);
  c.label = "sigma=" + num(sigma);
  c.meta = {{"eta", num(eta)}, {"sigma", num(sigma)}};
  return c;
}

Curve decay_curve(const std::vector<double>& xs, double eta, double t_ratio) {
  const rates::RateParams p = rates::params_from_eta_sigma(eta, 0.0);
  Curve c;
  c.abscissa = xs;
  c.values = sample_parallel(
      [&](double x) { return std::exp(t_ratio * rates::ln_G0(x, p)); }, xs);
  c.label = "T_over_T0=" + num(t_ratio);
  c.meta = {{"eta", num(eta)}, {"sigma", "0"}, {"T_over_T0", num(t_ratio)}};
  return c;
}

}  // namespace

CurveFamily run_figure(FigureId id, int samples, double x_max) {
  CurveFamily fam;
  fam.abscissa = linspace(0.0, x_max, samples);
  switch (id) {
    case FigureId::fig1: {
      fam.quantity = "gamma_over_Gamma_T";
      for (double sigma : {1.0, 0.5, 0.1})
        fam.series.push_back(rate_curve(fam.abscissa, 0.1, sigma));
      fam.meta = {{"figure", "fig1"}, {"eta", "0.1"}};
      break;
    }
    case FigureId::fig2: {
      fam.quantity = "gamma_over_Gamma_T";
      for (double eta : {0.1, 0.08, 0.05}) {
        Curve c = rate_curve(fam.abscissa, eta, 0.1);
        c.label = "eta=" + num(eta);
        fam.series.push_back(std::move(c));
      }
      fam.meta = {{"figure", "fig2"}, {"sigma", "0.1"}};
      break;
    }
    case FigureId::fig3: {
      fam.quantity = "decay_g";
      for (double ratio : {0.1, 0.02, 0.01, 0.002})
        fam.series.push_back(decay_curve(fam.abscissa, 0.1, ratio));
      fam.meta = {{"figure", "fig3"}, {"eta", "0.1"}, {"sigma", "0"}};
      break;
    }
  }
  fam.validate();
  return fam;
}

}  // namespace dephasing
