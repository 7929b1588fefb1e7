#pragma once

#include <span>
#include <vector>

#include "fracgreen/green.hpp"

namespace fracgreen {

/// Uniform grid t_i = t_start + i h, i = 0..steps.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, int steps);

  double t_start() const noexcept { return t_start_; }
  double t_end() const noexcept { return t_end_; }
  int steps() const noexcept { return steps_; }
  double h() const noexcept { return (t_end_ - t_start_) / steps_; }
  double node(int i) const noexcept { return t_start_ + i * h(); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(steps_) + 1; }

 private:
  double t_start_;
  double t_end_;
  int steps_;
};

/// L1 approximation of the Caputo derivative of order beta in (0, 1] with
/// lower terminal t_start, at nodes 1..steps (the result has `steps`
/// entries). beta = 1 reduces to the backward difference. O(h^{2-beta}) for
/// smooth samples.
std::vector<double> caputo_derivative(std::span<const double> samples, double beta, const TimeGrid& grid);

/// Product-trapezoid approximation of the left Riemann-Liouville integral of
/// order beta > 0 from t_start, at every node (entry 0 is 0). Exact for
/// piecewise-linear data.
std::vector<double> rl_integral(std::span<const double> samples, double beta, const TimeGrid& grid);

struct ResidualProfile {
  std::vector<double> times;
  std::vector<double> residual;
  std::vector<double> time_term;  ///< the fractional time derivative part
  double max_abs_residual = 0.0;
  double max_abs_time_term = 0.0;

  /// max|residual| / max|time term| over the window.
  double relative() const noexcept {
    return max_abs_time_term > 0.0 ? max_abs_residual / max_abs_time_term : max_abs_residual;
  }
};

struct ResidualOptions {
  double window_start = 0.0;  ///< report nodes with t >= window_start
  double stencil = 0.0;       ///< spatial difference step; 0 means grid.h()
};

/// Residual of the fractional diffusion equation, Caputo_t^beta G - D d^2G/dx^2,
/// for the 1D Green's function at fixed x != 0. The grid is the history grid:
/// with t_start = 0 the sample at t = 0 is the limit G(x, 0+) = 0.
ResidualProfile pde_residual_1d(const GreenSpec& spec, double x, const TimeGrid& grid,
                                const ResidualOptions& options = {}, const EvalConfig& cfg = {});

enum class FactorSign { plus, minus };

/// Residual of the half-order factor equation
///   Caputo_t^{beta/2} G +- sqrt(D) dG/dx
/// for the 1D Green's function on one half-line; `plus` is the matching
/// factor for x > 0, `minus` for x < 0.
ResidualProfile factorization_residual_1d(const GreenSpec& spec, double x, const TimeGrid& grid,
                                          FactorSign sign, const ResidualOptions& options = {},
                                          const EvalConfig& cfg = {});

}  // namespace fracgreen
