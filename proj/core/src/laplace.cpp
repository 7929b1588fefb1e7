#include "fracgreen/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracgreen/errors.hpp"
#include "fracgreen/fractional_ops.hpp"
#include "fracgreen/special.hpp"

namespace fracgreen {

namespace {

constexpr double talbot_alpha = 1.1721;
constexpr double talbot_step = 1.0818;
constexpr double talbot_mu = 4.4921;

void check_pair_params(double nu, double k) {
  if (!(nu > 0.0 && nu < 1.0)) raise(ErrorKind::InvalidArgument, "pair order needs 0 < nu < 1");
  if (!(k > 0.0) || !std::isfinite(k)) raise(ErrorKind::InvalidArgument, "pair coefficient needs k > 0");
}

double rel_diff(double a, double b) {
  return b != 0.0 ? std::abs(a - b) / std::abs(b) : std::abs(a);
}

}  // namespace

void TalbotConfig::validate() const {
  if (nodes < 16 || nodes % 2 != 0) raise(ErrorKind::InvalidArgument, "Talbot nodes must be even and >= 16");
  if (!(scale > 0.0) || !std::isfinite(scale)) raise(ErrorKind::InvalidArgument, "Talbot scale must be > 0");
}

EvalResult laplace_forward(const TimeFunction& f, double s, const QuadratureConfig& cfg) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    raise(ErrorKind::InvalidLaplaceVariable, "Laplace variable must be real and > 0");
  }
  auto g = [&](double tau) {
    const double e = std::exp(-tau);
    if (e == 0.0) return 0.0;
    return e * f(tau / s) / s;
  };
  const QuadResult q = integrate_semi_infinite(g, cfg);
  return {q.value, q.abs_error_estimate, q.nodes_used, Method::quadrature};
}

double talbot_inverse(const LaplaceFunction& F, double t, const TalbotConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0) || !std::isfinite(t)) raise(ErrorKind::InvalidArgument, "inversion time must be > 0");
  const int n = cfg.nodes;
  const double h = talbot_step / n;
  const double mu = cfg.scale * talbot_mu * n / t;
  const std::complex<double> i(0.0, 1.0);

  std::complex<double> acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double u = j * h;
    const std::complex<double> w = i * u - talbot_alpha;
    const std::complex<double> z = mu * (1.0 + std::sin(w));
    const std::complex<double> dz = mu * i * std::cos(w);
    std::complex<double> g = std::exp(z * t) * F(z) * dz;
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
      raise(ErrorKind::NonFiniteResult, "contour sample overflowed at node " + std::to_string(j));
    }
    if (j == 0) g *= 0.5;
    acc += g;
  }
  return h / special::pi * acc.imag();
}

PairCheck verify_pair(int pair_id, double nu, double k, std::span<const double> s_grid,
                      const PairOptions& options) {
  check_pair_params(nu, k);
  if (pair_id < 1 || pair_id > 3) raise(ErrorKind::InvalidArgument, "pair id must be 1, 2 or 3");
  if (s_grid.empty()) raise(ErrorKind::InvalidArgument, "s grid is empty");
  const double mu = options.mu;
  const EvalConfig& ec = options.eval;

  // Time side for the chosen argument sign (+1 printed, -1 negated).
  auto time_side = [&](double sign) -> TimeFunction {
    switch (pair_id) {
      case 1:
        return [=, &ec](double t) {
          if (t == 0.0) return 0.0;
          return nu * k * std::pow(t, -nu - 1.0) * evaluate_m_wright(nu, k * std::pow(t, -nu), ec).value;
        };
      case 2:
        return [=, &ec](double t) {
          if (t == 0.0) return 0.0;
          return std::pow(t, -nu) * evaluate_m_wright(nu, k * std::pow(t, -nu), ec).value;
        };
      default:
        return [=, &ec](double t) {
          if (t == 0.0) return 0.0;
          const double z = sign * k * std::pow(t, -nu);
          return std::pow(t, mu - 1.0) * evaluate_wright(WrightParams(-nu, mu), z, ec).value;
        };
    }
  };
  auto s_side = [&](std::complex<double> s) -> std::complex<double> {
    const auto e = std::exp(-k * std::pow(s, nu));
    switch (pair_id) {
      case 1: return e;
      case 2: return std::pow(s, nu - 1.0) * e;
      default: return std::pow(s, -mu) * e;
    }
  };

  auto forward_discrepancy = [&](const TimeFunction& f) {
    double worst = 0.0;
    for (double s : s_grid) {
      double lhs;
      try {
        lhs = laplace_forward(f, s, ec.quadrature).value;
      } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
      }
      const double d = rel_diff(lhs, s_side(s).real());
      if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
      worst = std::max(worst, d);
    }
    return worst;
  };

  PairCheck out;
  const TimeFunction printed = time_side(1.0);
  out.printed_discrepancy = forward_discrepancy(printed);
  TimeFunction chosen = printed;
  if (pair_id == 3) {
    const TimeFunction negated = time_side(-1.0);
    out.negated_discrepancy = forward_discrepancy(negated);
    if (out.negated_discrepancy < out.printed_discrepancy) {
      out.convention = PairConvention::negated_argument;
      chosen = negated;
    }
  } else {
    out.negated_discrepancy = out.printed_discrepancy;
  }
  out.max_rel_discrepancy = out.convention == PairConvention::printed ? out.printed_discrepancy
                                                                      : out.negated_discrepancy;

  for (double t : options.spot_times) {
    const double inv = talbot_inverse(s_side, t, options.talbot);
    out.inverse_discrepancy = std::max(out.inverse_discrepancy, rel_diff(inv, chosen(t)));
  }
  return out;
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::laplace(double s) const {
  double acc = 0.0;
  double factorial = 1.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) factorial *= static_cast<double>(n);
    acc += coeffs[n] * factorial / std::pow(s, static_cast<double>(n) + 1.0);
  }
  return acc;
}

CaputoTransformCheck caputo_transform_check(const Polynomial& f, double beta, double s, int steps) {
  if (!(beta > 0.0 && beta < 1.0)) raise(ErrorKind::OrderOutOfRange, "Caputo order must lie in (0, 1)");
  if (!(s > 0.0) || !std::isfinite(s)) raise(ErrorKind::InvalidLaplaceVariable, "Laplace variable must be > 0");
  if (f.coeffs.empty()) raise(ErrorKind::InvalidArgument, "empty polynomial");

  // Horizon where e^{-s t} sum|c_n| t^n is negligible.
  double abs_coeff = 0.0;
  for (double c : f.coeffs) abs_coeff += std::abs(c);
  const double degree = static_cast<double>(f.coeffs.size() - 1);
  double horizon = 1.0;
  while (std::exp(-s * horizon) * abs_coeff * std::pow(std::max(1.0, horizon), degree) > 1e-14) {
    horizon *= 1.25;
  }

  const TimeGrid grid(0.0, horizon, steps);
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = f(grid.node(static_cast<int>(i)));
  const std::vector<double> d = caputo_derivative(samples, beta, grid);

  // Piecewise-linear interpolant of the derivative samples, with value 0 at
  // t = 0 (the Caputo derivative of a polynomial vanishes there for beta < 1).
  const double h = grid.h();
  auto interp = [&](double t) {
    if (t >= horizon) return 0.0;
    const double pos = t / h;
    const int j = std::min(static_cast<int>(pos), steps - 1);
    const double left = (j == 0) ? 0.0 : d[j - 1];
    const double right = d[j];
    const double w = pos - j;
    return (1.0 - w) * left + w * right;
  };
  QuadratureConfig qc = QuadratureConfig::with_tolerances(1e-9, 1e-9, 4000000);
  const double lhs = laplace_forward(interp, s, qc).value;
  // s f_hat(s) - f(0) = sum_{n>=1} c_n n! / s^n, summed without the constant term.
  double tail = 0.0;
  double factor = 1.0;
  for (std::size_t n = 1; n < f.coeffs.size(); ++n) {
    factor *= static_cast<double>(n) / s;
    tail += f.coeffs[n] * factor;
  }
  const double rhs = std::pow(s, beta - 1.0) * tail;
  return {lhs, rhs, rel_diff(lhs, rhs)};
}

}  // namespace fracgreen
