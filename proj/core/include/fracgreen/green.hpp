#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracgreen/eval_result.hpp"
#include "fracgreen/wright_quadrature.hpp"

namespace fracgreen {

/// Direction n with ||n||_2 = 1 (within 1e-12); k = size() >= 1.
class UnitVector {
 public:
  explicit UnitVector(std::vector<double> components);

  /// Scales an arbitrary nonzero vector onto the unit sphere.
  static UnitVector normalized(std::vector<double> components);

  std::size_t size() const noexcept { return components_.size(); }
  std::span<const double> components() const noexcept { return components_; }
  double operator[](std::size_t i) const { return components_.at(i); }

  /// n . r; throws DimensionMismatch when the lengths differ.
  double dot(std::span<const double> r) const;

 private:
  std::vector<double> components_;
};

/// (beta, D, k, n) of a hyperplanar Green's function. Position and time are
/// call arguments.
class GreenSpec {
 public:
  GreenSpec(double beta, double diffusivity, UnitVector direction);

  double beta() const noexcept { return beta_; }
  double diffusivity() const noexcept { return diffusivity_; }
  int dim() const noexcept { return static_cast<int>(direction_.size()); }
  const UnitVector& direction() const noexcept { return direction_; }

 private:
  double beta_;
  double diffusivity_;
  UnitVector direction_;
};

/// G(x, t) = M_{beta/2}(|x| / (sqrt(D) t^{beta/2})) / (2 sqrt(D) t^{beta/2}), t > 0.
EvalResult green_1d(double x, double t, double beta, double diffusivity, const EvalConfig& cfg = {});

/// Explicit Wright form of the k-dimensional hyperplanar Green's function,
///   W(-beta/2, 1 - k beta/2; -|n.r| / (sqrt(D) t^{beta/2})) / ((2 sqrt(D))^k t^{k beta/2}).
EvalResult green_kd(std::span<const double> r, double t, const GreenSpec& spec,
                    const EvalConfig& cfg = {});

enum class KinkPolicy {
  right_limit,  ///< at n.r = 0 use the limit from n.r > 0
  strict,       ///< throw KinkPoint at n.r = 0
};

/// (-1/2)^k (n.grad)^k W(-beta/2, 1; -|n.r| / (sqrt(D) t^{beta/2})), evaluated by
/// applying d/dz W(l, m; z) = W(l, l + m; z) k times together with the chain
/// rule along n. The derivative is taken on the branch n.r > 0; points with
/// n.r < 0 are mapped there by reflection through the origin.
EvalResult green_kd_derivative_form(std::span<const double> r, double t, const GreenSpec& spec,
                                    KinkPolicy policy = KinkPolicy::right_limit,
                                    const EvalConfig& cfg = {});

/// Laplace-domain solution s^{k beta/2 - 1} / (2 sqrt(D))^k * exp(-u s^{beta/2} / sqrt(D)),
/// s > 0, u = n.r >= 0.
double green_hat_kd(double s, double u, const GreenSpec& spec);

/// Principal-branch continuation to complex s, used by numerical inversion.
std::complex<double> green_hat_kd(std::complex<double> s, double u, const GreenSpec& spec);

/// Mass of green_1d over the real line (expected to be 1).
EvalResult normalization_1d(double beta, double diffusivity, double t, const EvalConfig& cfg = {});

struct OrthantIntegral {
  double conventional;       ///< 1/(2^k s), with the direction factor absorbed
  double raw;                ///< numerical integral of the unabsorbed solution
  double direction_product;  ///< prod n_i; raw * direction_product == conventional
  double abs_error_estimate;
};

/// Integral of green_hat_kd over the positive orthant, computed as a product
/// of one-dimensional integrals. Requires every n_i > 0.
OrthantIntegral orthant_integral_hat(const GreenSpec& spec, double s, const QuadratureConfig& cfg = {});

}  // namespace fracgreen
