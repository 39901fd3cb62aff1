#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dephasing/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dephasing {

/// Controls for the panel-adaptive integrators.
struct QuadratureConfig {
  double rel_tol = 1e-9;        // relative tolerance on the integral
  double abs_floor = 1e-9;      // absolute tolerance floor (dimensionless work scale)
  int max_subdivisions = 20;    // bisection depth per panel
  double envelope_cutoff = 1e-16;  // truncate the tail where the integrand
                                   // envelope falls below cutoff * peak
  bool parallel = true;         // process panels with OpenMP

  void validate() const {
    if (!(rel_tol > 0) || !(abs_floor > 0))
      throw ParameterError("quadrature tolerances must be positive");
    if (!(envelope_cutoff > 0) || !(envelope_cutoff < 1))
      throw ParameterError("envelope cutoff must lie in (0, 1)");
    if (max_subdivisions < 1)
      throw ParameterError("max_subdivisions must be at least 1");
  }
};

/// Integral value with its error estimate. Every quadrature in the library
/// reports both.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

/// Fixed-order pairwise reduction. Used for all panel sums so totals are
/// identical for any thread count.
inline double pairwise_sum(const double* v, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 4) {
    double s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

/// Uniform panel grid over [a, b] with width at most `panel_width`.
inline std::vector<double> panel_edges(double a, double b, double panel_width) {
  if (!(b > a)) throw ParameterError("panel grid requires b > a");
  if (!(panel_width > 0)) throw ParameterError("panel width must be positive");
  const std::size_t n =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / panel_width)));
  std::vector<double> edges(n + 1);
  const double w = (b - a) / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) edges[i] = a + w * static_cast<double>(i);
  edges.back() = b;
  return edges;
}

namespace detail {

// One 61-point Gauss-Kronrod application; the error estimate comes from the
// embedded 30-point Gauss rule.
template <class F>
QuadResult panel_rule(const F& f, double a, double b) {
  QuadResult r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 0, 0.0, &r.error);
  return r;
}

// Serial bisection of a single panel until its error estimate fits inside
// `budget`, stopping once subdivision no longer improves the estimate (the
// error has hit the rounding floor). Left-to-right accumulation keeps the
// result deterministic.
template <class F>
QuadResult panel_refine_from(const F& f, double a, double b, QuadResult r,
                             double budget, int depth) {
  if (r.error <= budget || depth <= 0) return r;
  const double mid = 0.5 * (a + b);
  QuadResult left = panel_rule(f, a, mid);
  QuadResult right = panel_rule(f, mid, b);
  if (left.error + right.error >= 0.9 * r.error) {
    if (left.error + right.error < r.error)
      return {left.value + right.value, left.error + right.error};
    return r;
  }
  left = panel_refine_from(f, a, mid, left, 0.5 * budget, depth - 1);
  right = panel_refine_from(f, mid, b, right, 0.5 * budget, depth - 1);
  return {left.value + right.value, left.error + right.error};
}

template <class F>
QuadResult panel_refine(const F& f, double a, double b, double budget, int depth) {
  return panel_refine_from(f, a, b, panel_rule(f, a, b), budget, depth);
}

}  // namespace detail

/// Integrate f over a fixed panel grid. Panels are evaluated independently
/// (optionally in parallel), refined against width-proportional error
/// budgets, and combined by fixed-order pairwise reduction, so the result is
/// bit-identical for any thread count. `tail_bound` is an a-priori bound on
/// the truncated tail beyond the last edge; it is added to the reported
/// error. Throws QuadratureError if the requested tolerance is unreachable.
template <class F>
QuadResult integrate_panels(const F& f, const std::vector<double>& edges,
                            const QuadratureConfig& cfg, double tail_bound = 0.0) {
  cfg.validate();
  if (edges.size() < 2) throw ParameterError("panel grid needs at least one panel");
  const std::size_t n = edges.size() - 1;
  std::vector<double> values(n), errors(n);

  const auto first_pass = [&](std::size_t i) {
    const QuadResult r = detail::panel_rule(f, edges[i], edges[i + 1]);
    values[i] = r.value;
    errors[i] = r.error;
  };
#ifdef _OPENMP
  if (cfg.parallel) {
    // dynamic schedule: panel cost can grow along the axis (nested angular
    // moments); results land in arrays by index, so scheduling cannot
    // change the outcome
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      first_pass(static_cast<std::size_t>(i));
  } else
#endif
  {
    for (std::size_t i = 0; i < n; ++i) first_pass(i);
  }

  double total = pairwise_sum(values);
  double target = std::max(cfg.abs_floor, cfg.rel_tol * std::abs(total));
  double err_sum = pairwise_sum(errors);

  if (err_sum + tail_bound > target) {
    const double width = edges.back() - edges.front();
    const auto refine = [&](std::size_t i) {
      const double budget = target * (edges[i + 1] - edges[i]) / width;
      if (errors[i] > budget) {
        const QuadResult r = detail::panel_refine_from(
            f, edges[i], edges[i + 1], {values[i], errors[i]}, budget,
            cfg.max_subdivisions);
        values[i] = r.value;
        errors[i] = r.error;
      }
    };
#ifdef _OPENMP
    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        refine(static_cast<std::size_t>(i));
    } else
#endif
    {
      for (std::size_t i = 0; i < n; ++i) refine(i);
    }
    total = pairwise_sum(values);
    target = std::max(cfg.abs_floor, cfg.rel_tol * std::abs(total));
    err_sum = pairwise_sum(errors);
  }

  // Roundoff of the reduction itself; keeps the estimate honest when the
  // panel estimates are at machine level.
  double l1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) l1 += std::abs(values[i]);
  const double roundoff = 1e-15 * l1;

  const double reported = err_sum + tail_bound + roundoff;
  if (err_sum + tail_bound > target) {
    std::ostringstream os;
    os << "quadrature did not converge: achieved error " << reported
       << " exceeds requested " << target << " after refinement";
    throw QuadratureError(os.str(), total, reported, target);
  }
  return {total, reported};
}

/// Locate the tail truncation point: the smallest q >= start where the
/// (monotonically decaying) envelope has fallen below cutoff * peak.
template <class Envelope>
double find_cutoff(const Envelope& env, double start, double peak, double cutoff) {
  const double threshold = cutoff * peak;
  double lo = start;
  double hi = start;
  for (int i = 0; i < 200 && env(hi) > threshold; ++i) hi *= 2.0;
  if (env(hi) > threshold)
    throw ParameterError("envelope cutoff not reachable; integrand does not decay");
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (env(mid) > threshold)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace dephasing
