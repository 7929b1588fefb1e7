#pragma once

#include <functional>

namespace fracgreen {

/// Tolerances and truncation policy for integrals over [0, inf).
///
/// The engine integrates adaptively on [0, truncation_radius] and then
/// walks doubling panels [R, 2R], [2R, 4R], ... until their contribution
/// drops below tolerance, so integrands that decay later than e^{-r} are
/// still handled.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_nodes = 400000;
  double truncation_radius = 40.0;

  /// Config with R chosen so that e^{-R} < abs_tol / 10.
  static QuadratureConfig with_tolerances(double abs_tol, double rel_tol, int max_nodes = 400000);

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int nodes_used = 0;
  double truncated_tail_bound = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) estimate of the integral of f over [0, inf).
/// Integrable endpoint singularities at 0 are resolved by bisection.
/// Throws ToleranceNotMet (with the best estimate) or NonFiniteIntegrand.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& cfg = {});

/// Same engine on a finite interval [a, b].
QuadResult integrate_interval(const Integrand& f, double a, double b,
                              const QuadratureConfig& cfg = {});

}  // namespace fracgreen
