#include "fracgreen/wright_quadrature.hpp"

#include <cmath>

#include "fracgreen/errors.hpp"
#include "fracgreen/special.hpp"

namespace fracgreen {

namespace {

using special::cos_pi;
using special::pi;
using special::sin_pi;

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    raise(ErrorKind::InvalidArgument, "fractional order beta must lie in (0, 1]");
  }
}

// int_0^inf K(a, z, r) dr with r = u^(1/nu), nu = -a. The substituted
// integrand exp(-cos(pi a) z u - u^(1/nu)) sin(sin(pi a) z u) / (nu u) is
// bounded at u = 0.
QuadResult kernel_integral(double a, double z, const QuadratureConfig& cfg) {
  const double nu = -a;
  const double c = cos_pi(a);
  const double s = sin_pi(a);
  if (z == 0.0) return {0.0, 0.0, 0, 0.0};
  auto f = [=](double u) {
    if (u == 0.0) return s * z / nu;
    const double x = s * z * u;
    return std::exp(-c * z * u - std::pow(u, 1.0 / nu)) * std::sin(x) / (nu * u);
  };
  return integrate_semi_infinite(f, cfg);
}

EvalResult from_quad(double value, const QuadResult& q, double scale) {
  return {value, std::abs(scale) * q.abs_error_estimate, q.nodes_used, Method::quadrature};
}

}  // namespace

double theorem2_kernel(double a, double z, double r) {
  if (!(a < 0.0)) raise(ErrorKind::InvalidArgument, "kernel parameter a must be negative");
  if (!(r > 0.0)) raise(ErrorKind::InvalidArgument, "kernel variable r must be positive");
  const double ra = std::pow(r, a);
  return std::exp(-cos_pi(a) * z / ra - r) * std::sin(sin_pi(a) * z / ra) / r;
}

EvalResult integral_wright_raw(double beta, double z, const QuadratureConfig& cfg) {
  check_beta(beta);
  if (!std::isfinite(z)) raise(ErrorKind::InvalidArgument, "argument must be finite");
  const QuadResult q = kernel_integral(-0.5 * beta, z, cfg);
  return from_quad(0.5 + q.value / pi, q, 1.0 / pi);
}

EvalResult integral_wright_printed(double beta, double z, const QuadratureConfig& cfg) {
  check_beta(beta);
  if (!std::isfinite(z)) raise(ErrorKind::InvalidArgument, "argument must be finite");
  const double a = -0.5 * beta;
  if (z >= 0.0) {
    const QuadResult q = kernel_integral(a, -z, cfg);
    return from_quad(0.5 - q.value / pi, q, 1.0 / pi);
  }
  const QuadResult q = kernel_integral(a, z, cfg);
  return from_quad(0.5 + q.value / pi, q, 1.0 / pi);
}

EvalResult integral_wright(double beta, double z, const QuadratureConfig& cfg) {
  EvalResult raw = integral_wright_raw(beta, z, cfg);
  raw.value += integral_wright_offset;
  return raw;
}

double luchko_kernel(double nu, double z, double u) {
  if (!(nu > 0.0 && nu < 1.0)) raise(ErrorKind::InvalidArgument, "Luchko kernel needs 0 < nu < 1");
  return std::exp(-std::pow(u, 1.0 / nu) - z * u * cos_pi(nu)) * std::sin(pi * nu - z * u * sin_pi(nu));
}

EvalResult m_wright_integral(double nu, double z, const QuadratureConfig& cfg) {
  if (!(nu > 0.0 && nu < 1.0)) raise(ErrorKind::InvalidArgument, "M-Wright integral needs 0 < nu < 1");
  if (!(z >= 0.0) || !std::isfinite(z)) {
    raise(ErrorKind::InvalidArgument, "M-Wright integral needs finite z >= 0");
  }
  if (nu <= 0.5) {
    auto f = [=](double u) { return luchko_kernel(nu, z, u); };
    const QuadResult q = integrate_semi_infinite(f, cfg);
    const double scale = 1.0 / (pi * nu);
    return from_quad(scale * q.value, q, scale);
  }
  // For nu > 1/2 the Luchko kernel grows like exp(z u |cos(pi nu)|) before
  // the u^(1/nu) decay wins; rotate the rays instead.
  return wright_integral(WrightParams(-nu, 1.0 - nu), -z, cfg);
}

EvalResult wright_integral(const WrightParams& params, double zeta, const QuadratureConfig& cfg) {
  const double lambda = params.lambda();
  const double mu = params.mu();
  if (!(lambda < 0.0)) raise(ErrorKind::InvalidArgument, "wright_integral needs -1 < lambda < 0");
  if (!(mu <= 1.0)) raise(ErrorKind::InvalidArgument, "wright_integral needs mu <= 1");
  if (!std::isfinite(zeta)) raise(ErrorKind::InvalidArgument, "argument must be finite");

  const double nu = -lambda;
  // Ray angle as a fraction of pi.
  const double d = (zeta < 0.0 && nu > 0.5) ? (1.0 + nu) / (4.0 * nu) : 1.0;
  const double cos_d = cos_pi(d);
  const double sin_d = sin_pi(d);
  const double cos_nd = cos_pi(nu * d);
  const double sin_nd = sin_pi(nu * d);
  const double phase0 = (1.0 - mu) * d * pi;
  const double power = (1.0 - mu) / nu - 1.0;
  const bool unit_mu = (mu == 1.0);

  auto f = [=](double u) {
    if (u == 0.0) {
      if (unit_mu) return zeta * sin_nd;  // sin(x)/u limit
      return power == 0.0 ? std::sin(phase0) : 0.0;
    }
    const double r = std::pow(u, 1.0 / nu);
    const double expo = r * cos_d + zeta * u * cos_nd;
    const double phase = r * sin_d + zeta * u * sin_nd + phase0;
    return std::pow(u, power) * std::exp(expo) * std::sin(phase);
  };
  const QuadResult q = integrate_semi_infinite(f, cfg);
  const double scale = 1.0 / (pi * nu);
  // When mu = 1 the small arc of angle 2 d pi around the origin contributes
  // d times the residue of 1/sigma; it vanishes for mu < 1.
  const double circle = unit_mu ? d : 0.0;
  return from_quad(circle + scale * q.value, q, scale);
}

EvalResult evaluate_wright(const WrightParams& params, double z, const EvalConfig& cfg) {
  try {
    return wright(params, z, cfg.series);
  } catch (const NonConvergence&) {
    if (params.lambda() < 0.0 && params.mu() <= 1.0) {
      return wright_integral(params, z, cfg.quadrature);
    }
    throw;
  }
}

EvalResult evaluate_m_wright(double nu, double z, const EvalConfig& cfg) {
  try {
    return m_wright(nu, z, cfg.series);
  } catch (const NonConvergence&) {
    return wright_integral(WrightParams(-nu, 1.0 - nu), -z, cfg.quadrature);
  }
}

EvalResult evaluate_wright_derivative(const WrightParams& params, double z, int order,
                                      const EvalConfig& cfg) {
  if (order < 1) raise(ErrorKind::InvalidArgument, "derivative order must be >= 1");
  return evaluate_wright(WrightParams(params.lambda(), params.lambda() * order + params.mu()), z,
                         cfg);
}

}  // namespace fracgreen
