#include "fracgreen/green.hpp"

#include <cmath>
#include <numeric>

#include "fracgreen/errors.hpp"
#include "fracgreen/special.hpp"

namespace fracgreen {

namespace {

constexpr double unit_norm_tol = 1e-12;

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    raise(ErrorKind::InvalidArgument, "fractional order beta must lie in (0, 1]");
  }
}

void check_diffusivity(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) raise(ErrorKind::InvalidArgument, "diffusivity must be > 0");
}

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    raise(ErrorKind::InvalidTime, "Green's functions are defined for t > 0 only");
  }
}

// sqrt(D) t^{beta/2}: the length scale of the similarity variable.
double similarity_scale(double beta, double diffusivity, double t) {
  return std::sqrt(diffusivity) * std::pow(t, 0.5 * beta);
}

EvalResult scaled(EvalResult r, double factor) {
  r.value *= factor;
  r.abs_error_estimate *= std::abs(factor);
  return r;
}

}  // namespace

UnitVector::UnitVector(std::vector<double> components) : components_(std::move(components)) {
  if (components_.empty()) raise(ErrorKind::InvalidDirection, "direction needs k >= 1 components");
  double norm2 = 0.0;
  for (double c : components_) {
    if (!std::isfinite(c)) raise(ErrorKind::InvalidDirection, "direction components must be finite");
    norm2 += c * c;
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > unit_norm_tol) {
    raise(ErrorKind::InvalidDirection, "direction must be a unit vector");
  }
}

UnitVector UnitVector::normalized(std::vector<double> components) {
  const double norm = std::sqrt(std::inner_product(components.begin(), components.end(),
                                                   components.begin(), 0.0));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    raise(ErrorKind::InvalidDirection, "cannot normalise a zero or non-finite vector");
  }
  for (double& c : components) c /= norm;
  return UnitVector(std::move(components));
}

double UnitVector::dot(std::span<const double> r) const {
  if (r.size() != components_.size()) {
    raise(ErrorKind::DimensionMismatch, "position has " + std::to_string(r.size()) +
                                            " components, direction has " +
                                            std::to_string(components_.size()));
  }
  return std::inner_product(components_.begin(), components_.end(), r.begin(), 0.0);
}

GreenSpec::GreenSpec(double beta, double diffusivity, UnitVector direction)
    : beta_(beta), diffusivity_(diffusivity), direction_(std::move(direction)) {
  check_beta(beta);
  check_diffusivity(diffusivity);
}

EvalResult green_1d(double x, double t, double beta, double diffusivity, const EvalConfig& cfg) {
  check_beta(beta);
  check_diffusivity(diffusivity);
  check_time(t);
  if (!std::isfinite(x)) raise(ErrorKind::InvalidArgument, "position must be finite");
  const double c = similarity_scale(beta, diffusivity, t);
  return scaled(evaluate_m_wright(0.5 * beta, std::abs(x) / c, cfg), 0.5 / c);
}

EvalResult green_kd(std::span<const double> r, double t, const GreenSpec& spec, const EvalConfig& cfg) {
  check_time(t);
  const double u = spec.direction().dot(r);
  const int k = spec.dim();
  const double beta = spec.beta();
  const double c = similarity_scale(beta, spec.diffusivity(), t);
  const WrightParams params(-0.5 * beta, 1.0 - 0.5 * k * beta);
  const double prefactor = std::pow(2.0 * c, -k);
  return scaled(evaluate_wright(params, -std::abs(u) / c, cfg), prefactor);
}

EvalResult green_kd_derivative_form(std::span<const double> r, double t, const GreenSpec& spec,
                                    KinkPolicy policy, const EvalConfig& cfg) {
  check_time(t);
  double u = spec.direction().dot(r);
  if (u == 0.0 && policy == KinkPolicy::strict) {
    raise(ErrorKind::KinkPoint, "n.r = 0: |n.r| is not differentiable there");
  }
  // Reflection across the origin maps n.r < 0 onto the differentiated branch.
  if (u < 0.0) u = -u;

  const int k = spec.dim();
  const double a = -0.5 * spec.beta();
  const double c = similarity_scale(spec.beta(), spec.diffusivity(), t);

  // On u > 0, f(u) = W(a, 1; -u/c) and (n.grad) acts as d/du since n.n = 1:
  //   d^k/du^k f = (-1/c)^k W(a, 1 + k a; -u/c).
  const EvalResult dk = evaluate_wright_derivative(WrightParams(a, 1.0), -u / c, k, cfg);
  const double chain = std::pow(-1.0 / c, k);
  const double outer = std::pow(-0.5, k);
  return scaled(dk, outer * chain);
}

double green_hat_kd(double s, double u, const GreenSpec& spec) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    raise(ErrorKind::InvalidLaplaceVariable, "Laplace variable must be real and > 0");
  }
  if (!(u >= 0.0)) raise(ErrorKind::InvalidArgument, "u = n.r must be >= 0");
  const int k = spec.dim();
  const double beta = spec.beta();
  const double sqrt_d = std::sqrt(spec.diffusivity());
  return std::pow(s, 0.5 * k * beta - 1.0) / std::pow(2.0 * sqrt_d, k) *
         std::exp(-u * std::pow(s, 0.5 * beta) / sqrt_d);
}

std::complex<double> green_hat_kd(std::complex<double> s, double u, const GreenSpec& spec) {
  if (!(u >= 0.0)) raise(ErrorKind::InvalidArgument, "u = n.r must be >= 0");
  const int k = spec.dim();
  const double beta = spec.beta();
  const double sqrt_d = std::sqrt(spec.diffusivity());
  return std::pow(s, 0.5 * k * beta - 1.0) / std::pow(2.0 * sqrt_d, k) *
         std::exp(-u * std::pow(s, 0.5 * beta) / sqrt_d);
}

EvalResult normalization_1d(double beta, double diffusivity, double t, const EvalConfig& cfg) {
  check_beta(beta);
  check_diffusivity(diffusivity);
  check_time(t);
  // Even in x: integrate the right half-line and double it. The engine works
  // on the natural length scale so the default truncation radius applies.
  const double c = similarity_scale(beta, diffusivity, t);
  auto f = [&](double y) { return green_1d(c * y, t, beta, diffusivity, cfg).value * c; };
  const QuadResult q = integrate_semi_infinite(f, cfg.quadrature);
  return {2.0 * q.value, 2.0 * q.abs_error_estimate, q.nodes_used, Method::quadrature};
}

OrthantIntegral orthant_integral_hat(const GreenSpec& spec, double s, const QuadratureConfig& cfg) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    raise(ErrorKind::InvalidLaplaceVariable, "Laplace variable must be real and > 0");
  }
  const auto n = spec.direction().components();
  for (double ni : n) {
    if (!(ni > 0.0)) raise(ErrorKind::InvalidDirection, "orthant integral needs every n_i > 0");
  }
  const int k = spec.dim();
  const double sqrt_d = std::sqrt(spec.diffusivity());
  const double rate = std::pow(s, 0.5 * spec.beta()) / sqrt_d;

  // Separable: prefactor * prod_i int_0^inf exp(-n_i x_i rate) dx_i.
  const double prefactor = std::pow(s, 0.5 * k * spec.beta() - 1.0) / std::pow(2.0 * sqrt_d, k);
  double raw = prefactor;
  double rel_err = 0.0;
  double direction_product = 1.0;
  for (double ni : n) {
    const double decay = ni * rate;
    const QuadResult q = integrate_semi_infinite([=](double x) { return std::exp(-decay * x); }, cfg);
    raw *= q.value;
    rel_err += q.abs_error_estimate / std::abs(q.value);
    direction_product *= ni;
  }
  return {1.0 / (std::pow(2.0, k) * s), raw, direction_product, rel_err * std::abs(raw)};
}

}  // namespace fracgreen
