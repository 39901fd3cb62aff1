#include "dephasing/curve.hpp"

#include <cmath>
#include <exception>

#include "dephasing/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dephasing {

void Curve::validate() const {
  if (abscissa.size() != values.size())
    throw ParameterError("curve abscissa and values must have equal length");
  for (std::size_t i = 0; i + 1 < abscissa.size(); ++i) {
    if (!(abscissa[i] < abscissa[i + 1]))
      throw ParameterError("curve abscissa must be strictly increasing");
  }
}

void CurveFamily::validate() const {
  for (const auto& c : series) {
    c.validate();
    if (c.abscissa.size() != abscissa.size())
      throw ParameterError("curve family members must share the abscissa");
  }
  for (std::size_t i = 0; i + 1 < abscissa.size(); ++i) {
    if (!(abscissa[i] < abscissa[i + 1]))
      throw ParameterError("curve abscissa must be strictly increasing");
  }
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw ParameterError("linspace needs at least two samples");
  std::vector<double> xs(n);
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) xs[i] = a + step * i;
  xs.back() = b;
  return xs;
}

std::vector<double> sample_serial(const std::function<double(double)>& f,
                                  const std::vector<double>& xs) {
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
  return ys;
}

std::vector<double> sample_parallel(const std::function<double(double)>& f,
                                    const std::vector<double>& xs) {
  std::vector<double> ys(xs.size());
  std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) {
    try {
      ys[i] = f(xs[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return ys;
}

}  // namespace dephasing
