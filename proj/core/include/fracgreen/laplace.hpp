#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fracgreen/eval_result.hpp"
#include "fracgreen/wright_quadrature.hpp"

namespace fracgreen {

using TimeFunction = std::function<double(double)>;
using LaplaceFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Hyperbolic (cosh-type) Bromwich contour
///   s(u) = mu (1 + sin(i u - alpha)),  alpha = 1.1721,
/// sampled at u_j = j h, h = 1.0818 / nodes, mu = scale * 4.4921 * nodes / t.
/// A scale below 1 trades discretisation error (far below double precision
/// at 48 nodes) for less e^{mu t} amplification of rounding.
struct TalbotConfig {
  int nodes = 48;
  double scale = 0.25;

  void validate() const;
};

/// int_0^inf e^{-s t} f(t) dt for real s > 0, integrated in tau = s t.
EvalResult laplace_forward(const TimeFunction& f, double s, const QuadratureConfig& cfg = {});

/// Numerical inverse Laplace transform at t > 0. F must be analytic to the
/// right of (and on) the contour; branch cuts on the negative real axis are fine.
double talbot_inverse(const LaplaceFunction& F, double t, const TalbotConfig& cfg = {});

enum class PairConvention {
  printed,          ///< time side argument +k t^{-nu}, as tabulated
  negated_argument  ///< time side argument -k t^{-nu}
};

struct PairCheck {
  /// Max relative discrepancy of the convention that holds (see `convention`).
  double max_rel_discrepancy = 0.0;
  double printed_discrepancy = 0.0;
  /// Only meaningful for pair 3; equals printed_discrepancy for pairs 1 and 2.
  double negated_discrepancy = 0.0;
  PairConvention convention = PairConvention::printed;
  /// Max relative discrepancy of talbot_inverse(s side) against the time side
  /// at the spot times, for the chosen convention.
  double inverse_discrepancy = 0.0;
};

struct PairOptions {
  double mu = 0.5;  ///< pair 3 only
  std::vector<double> spot_times{0.5, 1.0, 2.0};
  EvalConfig eval{};
  TalbotConfig talbot{};
};

/// Laplace pairs of the M-Wright and Wright functions (0 < nu < 1, k > 0):
///   1: nu k t^{-nu-1} M_nu(k t^{-nu})   <->  exp(-k s^nu)
///   2: t^{-nu} M_nu(k t^{-nu})          <->  s^{nu-1} exp(-k s^nu)
///   3: t^{mu-1} W(-nu, mu; k t^{-nu})   <->  s^{-mu} exp(-k s^nu)
/// The time side is transformed numerically at each s and compared with the
/// closed s side. For pair 3 both the printed argument and its negation are
/// checked; the printed one diverges at t -> 0 unless W(-nu, mu; .) is even.
PairCheck verify_pair(int pair_id, double nu, double k, std::span<const double> s_grid,
                      const PairOptions& options = {});

/// Polynomial sum_n c_n t^n, used as a test function with a known transform.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double t) const;
  /// sum_n c_n n! / s^{n+1}
  double laplace(double s) const;
};

struct CaputoTransformCheck {
  double lhs;  ///< Laplace transform of the L1 Caputo derivative
  double rhs;  ///< s^beta f_hat(s) - s^{beta-1} f(0+)
  double discrepancy;  ///< relative, or absolute when rhs == 0
};

CaputoTransformCheck caputo_transform_check(const Polynomial& f, double beta, double s,
                                            int steps = 4000);

}  // namespace fracgreen
