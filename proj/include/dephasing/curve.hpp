#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dephasing {

/// Sampled dimensionless series. `meta` is the parameter echo carried into
/// serialized output.
struct Curve {
  std::vector<double> abscissa;
  std::vector<double> values;
  std::string label;
  std::map<std::string, std::string> meta;

  void validate() const;  // equal lengths, strictly increasing abscissa
};

/// A set of curves sharing one abscissa (one output column per curve).
struct CurveFamily {
  std::vector<double> abscissa;
  std::vector<Curve> series;
  std::string abscissa_label = "t_over_tau_d";
  std::string quantity;
  std::map<std::string, std::string> meta;

  void validate() const;
};

std::vector<double> linspace(double a, double b, int n);

/// Point evaluation of f over xs. The parallel version runs the points
/// under OpenMP with deterministic output ordering; the serial version is
/// the reference used by the tests and the benchmark.
std::vector<double> sample_serial(const std::function<double(double)>& f,
                                  const std::vector<double>& xs);
std::vector<double> sample_parallel(const std::function<double(double)>& f,
                                    const std::vector<double>& xs);

}  // namespace dephasing
