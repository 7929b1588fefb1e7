#include "fracgreen/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "fracgreen/errors.hpp"

namespace fracgreen {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point nodes on [-1, 1] (non-negative half) and weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  if (!std::isfinite(fc)) {
    raise(ErrorKind::NonFiniteIntegrand, "integrand is not finite at r = " + std::to_string(c));
  }
  double resk = fc * wgk[7];
  double resg = fc * wg[3];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    if (!std::isfinite(f1) || !std::isfinite(f2)) {
      raise(ErrorKind::NonFiniteIntegrand,
            "integrand is not finite near r = " + std::to_string(c - dx));
    }
    resk += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  const double value = resk * h;
  const double abs_value = resabs * std::abs(h);
  // Gauss/Kronrod difference, floored at the rounding level of the panel.
  double error = std::abs((resk - resg) * h);
  error = std::max(error, 50.0 * eps * abs_value);
  return {a, b, value, error, abs_value};
}

struct Partial {
  double value = 0.0;
  double error = 0.0;
  int nodes = 0;
  bool converged = false;
};

// Adaptive bisection on [a, b] until the summed error is below the target
// returned by `target(value)`.
template <class Target>
Partial adapt(const Integrand& f, double a, double b, int node_budget, Target target) {
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  Partial out;
  out.nodes = 15;
  heap.push(first);
  double value = first.value;
  double error = first.error;
  double floor_error = 0.0;  // panels that cannot be refined further

  while (true) {
    if (error + floor_error <= target(value)) {
      out.converged = true;
      break;
    }
    if (heap.empty() || out.nodes + 30 > node_budget) break;
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || worst.error <= 50.0 * eps * worst.abs_value) {
      // At the resolution or rounding limit; keep its contribution as is.
      error -= worst.error;
      floor_error += worst.error;
      continue;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    out.nodes += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  out.value = value;
  out.error = std::max(0.0, error) + floor_error;
  return out;
}

}  // namespace

QuadratureConfig QuadratureConfig::with_tolerances(double abs_tol, double rel_tol, int max_nodes) {
  QuadratureConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.rel_tol = rel_tol;
  cfg.max_nodes = max_nodes;
  cfg.truncation_radius = std::max(1.0, std::log(10.0 / abs_tol) + 1.0);
  cfg.validate();
  return cfg;
}

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol) || !(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    raise(ErrorKind::InvalidArgument, "quadrature tolerances must be positive and finite");
  }
  if (max_nodes < 32) raise(ErrorKind::InvalidArgument, "max_nodes must be >= 32");
  if (!(truncation_radius > 0.0) || !std::isfinite(truncation_radius)) {
    raise(ErrorKind::InvalidArgument, "truncation_radius must be positive");
  }
  if (!(std::exp(-truncation_radius) < abs_tol / 10.0)) {
    raise(ErrorKind::InvalidArgument, "truncation_radius too small: need exp(-R) < abs_tol/10");
  }
}

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(b > a)) raise(ErrorKind::InvalidArgument, "integration interval must satisfy b > a");
  auto target = [&](double v) { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v)); };
  const Partial p = adapt(f, a, b, cfg.max_nodes, target);
  if (!p.converged) {
    throw ToleranceNotMet("adaptive quadrature did not reach tolerance", p.value, p.error);
  }
  return {p.value, p.error, p.nodes, 0.0};
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& cfg) {
  cfg.validate();
  const double radius = cfg.truncation_radius;

  // Half of the budget goes to the body, the rest to the tail panels.
  auto body_target = [&](double v) {
    return 0.5 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v));
  };
  Partial body = adapt(f, 0.0, radius, cfg.max_nodes, body_target);
  double value = body.value;
  double error = body.error;
  int nodes = body.nodes;
  bool converged = body.converged;

  // Tail: doubling panels until one is negligible. For integrands that decay
  // at least exponentially the remainder beyond the last panel is bounded by
  // that panel's magnitude.
  double tail_bound = 0.0;
  double lo = radius;
  constexpr int max_panels = 40;
  int panel = 0;
  for (; panel < max_panels; ++panel) {
    const double hi = 2.0 * lo;
    const double scale = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    auto panel_target = [&](double) { return 0.125 * scale; };
    const int remaining = std::max(60, cfg.max_nodes - nodes);
    Partial p = adapt(f, lo, hi, remaining, panel_target);
    nodes += p.nodes;
    value += p.value;
    error += p.error;
    converged = converged && p.converged;
    const double magnitude = std::abs(p.value) + p.error;
    tail_bound = magnitude;
    lo = hi;
    if (magnitude <= 0.125 * scale) break;
  }
  if (panel == max_panels) converged = false;

  const double total_error = error + tail_bound;
  const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
  if (!std::isfinite(value)) raise(ErrorKind::NonFiniteIntegrand, "integral is not finite");
  if (!converged || total_error > target) {
    throw ToleranceNotMet("semi-infinite quadrature did not reach tolerance", value, total_error);
  }
  return {value, total_error, nodes, tail_bound};
}

}  // namespace fracgreen
