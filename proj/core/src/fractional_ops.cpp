#include "fracgreen/fractional_ops.hpp"

#include <algorithm>
#include <cmath>

#include "fracgreen/errors.hpp"

namespace fracgreen {

namespace {

void check_samples(std::span<const double> samples, const TimeGrid& grid) {
  if (samples.size() != grid.size()) {
    raise(ErrorKind::DimensionMismatch, "expected " + std::to_string(grid.size()) +
                                            " samples, got " + std::to_string(samples.size()));
  }
}

std::vector<double> green_samples(const GreenSpec& spec, double x, const TimeGrid& grid,
                                  const EvalConfig& cfg) {
  std::vector<double> g(grid.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = grid.node(static_cast<int>(i));
    // G(x, 0+) = 0 away from the source.
    g[i] = (t == 0.0) ? 0.0 : green_1d(x, t, spec.beta(), spec.diffusivity(), cfg).value;
  }
  return g;
}

ResidualProfile assemble(const TimeGrid& grid, const std::vector<double>& time_term,
                         const std::vector<double>& space_term, double window_start) {
  ResidualProfile out;
  for (int i = 1; i <= grid.steps(); ++i) {
    const double t = grid.node(i);
    if (t < window_start) continue;
    const double tt = time_term[i - 1];
    const double r = tt - space_term[i];
    out.times.push_back(t);
    out.time_term.push_back(tt);
    out.residual.push_back(r);
    out.max_abs_residual = std::max(out.max_abs_residual, std::abs(r));
    out.max_abs_time_term = std::max(out.max_abs_time_term, std::abs(tt));
  }
  if (out.times.empty()) raise(ErrorKind::InvalidArgument, "evaluation window contains no nodes");
  return out;
}

}  // namespace

TimeGrid::TimeGrid(double t_start, double t_end, int steps)
    : t_start_(t_start), t_end_(t_end), steps_(steps) {
  if (!(t_start >= 0.0) || !std::isfinite(t_start)) raise(ErrorKind::InvalidArgument, "t_start must be >= 0");
  if (!(t_end > t_start) || !std::isfinite(t_end)) raise(ErrorKind::InvalidArgument, "t_end must exceed t_start");
  if (steps < 1) raise(ErrorKind::InvalidArgument, "grid needs at least one step");
}

std::vector<double> caputo_derivative(std::span<const double> samples, double beta, const TimeGrid& grid) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    raise(ErrorKind::OrderOutOfRange, "Caputo order must lie in (0, 1]");
  }
  check_samples(samples, grid);
  const int n_steps = grid.steps();
  const double h = grid.h();
  std::vector<double> out(n_steps);

  std::vector<double> diff(n_steps);
  for (int i = 0; i < n_steps; ++i) diff[i] = samples[i + 1] - samples[i];

  if (beta == 1.0) {
    for (int n = 0; n < n_steps; ++n) out[n] = diff[n] / h;
    return out;
  }

  // b_j = (j+1)^{1-beta} - j^{1-beta}
  const double p = 1.0 - beta;
  std::vector<double> b(n_steps);
  for (int j = 0; j < n_steps; ++j) b[j] = std::pow(j + 1.0, p) - std::pow(static_cast<double>(j), p);

  const double coef = std::pow(h, -beta) / std::tgamma(2.0 - beta);
  for (int n = 1; n <= n_steps; ++n) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += b[j] * diff[n - 1 - j];
    out[n - 1] = coef * acc;
  }
  return out;
}

std::vector<double> rl_integral(std::span<const double> samples, double beta, const TimeGrid& grid) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    raise(ErrorKind::OrderOutOfRange, "Riemann-Liouville order must be > 0");
  }
  check_samples(samples, grid);
  const int n_steps = grid.steps();
  const double q = beta + 1.0;
  std::vector<double> pw(n_steps + 2);
  for (int m = 0; m <= n_steps + 1; ++m) pw[m] = std::pow(static_cast<double>(m), q);

  const double coef = std::pow(grid.h(), beta) / std::tgamma(beta + 2.0);
  std::vector<double> out(grid.size(), 0.0);
  for (int n = 1; n <= n_steps; ++n) {
    double acc = (pw[n - 1] - (n - 1.0 - beta) * std::pow(static_cast<double>(n), beta)) * samples[0];
    for (int j = 1; j < n; ++j) {
      const int m = n - j;
      acc += (pw[m + 1] - 2.0 * pw[m] + pw[m - 1]) * samples[j];
    }
    acc += samples[n];
    out[n] = coef * acc;
  }
  return out;
}

ResidualProfile pde_residual_1d(const GreenSpec& spec, double x, const TimeGrid& grid,
                                const ResidualOptions& options, const EvalConfig& cfg) {
  if (spec.dim() != 1) raise(ErrorKind::DimensionMismatch, "pde_residual_1d needs a 1D spec");
  if (x == 0.0 || !std::isfinite(x)) raise(ErrorKind::InvalidArgument, "x must be finite and nonzero");
  const double dx = options.stencil > 0.0 ? options.stencil : grid.h();
  if (!(std::abs(x) > dx)) raise(ErrorKind::InvalidArgument, "stencil crosses the source at x = 0");

  const auto g = green_samples(spec, x, grid, cfg);
  const auto gp = green_samples(spec, x + dx, grid, cfg);
  const auto gm = green_samples(spec, x - dx, grid, cfg);
  const auto time_term = caputo_derivative(g, spec.beta(), grid);

  std::vector<double> space(grid.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    space[i] = spec.diffusivity() * (gp[i] - 2.0 * g[i] + gm[i]) / (dx * dx);
  }
  return assemble(grid, time_term, space, options.window_start);
}

ResidualProfile factorization_residual_1d(const GreenSpec& spec, double x, const TimeGrid& grid,
                                          FactorSign sign, const ResidualOptions& options,
                                          const EvalConfig& cfg) {
  if (spec.dim() != 1) raise(ErrorKind::DimensionMismatch, "factorization residual needs a 1D spec");
  if (x == 0.0 || !std::isfinite(x)) raise(ErrorKind::InvalidArgument, "x must be finite and nonzero");
  const double dx = options.stencil > 0.0 ? options.stencil : grid.h();
  if (!(std::abs(x) > dx)) raise(ErrorKind::InvalidArgument, "stencil crosses the source at x = 0");

  const auto g = green_samples(spec, x, grid, cfg);
  const auto gp = green_samples(spec, x + dx, grid, cfg);
  const auto gm = green_samples(spec, x - dx, grid, cfg);
  const auto time_term = caputo_derivative(g, 0.5 * spec.beta(), grid);

  // residual = time_term + s sqrt(D) dG/dx, written as time_term - space.
  const double s = (sign == FactorSign::plus) ? 1.0 : -1.0;
  const double sqrt_d = std::sqrt(spec.diffusivity());
  std::vector<double> space(grid.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    space[i] = -s * sqrt_d * (gp[i] - gm[i]) / (2.0 * dx);
  }
  return assemble(grid, time_term, space, options.window_start);
}

}  // namespace fracgreen
