#pragma once

#include "fracgreen/eval_result.hpp"
#include "fracgreen/quadrature.hpp"
#include "fracgreen/wright_series.hpp"

namespace fracgreen {

/// Series policy plus the quadrature policy used when the series is rejected.
struct EvalConfig {
  SeriesConfig series{};
  QuadratureConfig quadrature{};
};

/// K(a, z, r) = exp(-cos(pi a) z / r^a - r) sin(sin(pi a) z / r^a) / r,
/// the real-line kernel of the integral Wright function. Requires a < 0, r > 0.
double theorem2_kernel(double a, double z, double r);

/// Additive constant between the series W(-beta/2, 1; -z) and the raw
/// kernel representation. It is the contribution of the small circle of the
/// Hankel contour around the origin that the kernel integral leaves out.
inline constexpr double integral_wright_offset = 0.5;

/// Raw kernel representation 1/2 + (1/pi) int_0^inf K(-beta/2, z, r) dr,
/// valid for every real z. At z = 0 it equals 1/2.
EvalResult integral_wright_raw(double beta, double z, const QuadratureConfig& cfg = {});

/// The two-branch formula exactly as usually printed:
///   z >= 0:  1/2 - (1/pi) int K(a, -z, r) dr
///   z <  0:  1/2 + (1/pi) int K(a,  z, r) dr
/// The z >= 0 branch agrees with integral_wright_raw only for beta = 1, where
/// K is odd in z. Kept for diagnostics.
EvalResult integral_wright_printed(double beta, double z, const QuadratureConfig& cfg = {});

/// Integral Wright function W_I(z, beta) = W(-beta/2, 1; -z), 0 < beta <= 1,
/// from the kernel representation plus integral_wright_offset.
EvalResult integral_wright(double beta, double z, const QuadratureConfig& cfg = {});

/// Real-line kernel for M_nu in the variable u = r^nu:
///   exp(-u^(1/nu) - z u cos(pi nu)) sin(pi nu - z u sin(pi nu)),
/// with M_nu(z) = 1/(pi nu) * int_0^inf kernel du.
double luchko_kernel(double nu, double z, double u);

/// M_nu(z) for 0 < nu < 1 and z >= 0 by the real-line kernel integral.
EvalResult m_wright_integral(double nu, double z, const QuadratureConfig& cfg = {});

/// W(lambda, mu; zeta) for -1 < lambda < 0 and mu <= 1 by integrating along
/// the two rays of a Hankel contour at angle +-delta. delta = pi except for
/// nu = -lambda > 1/2 with zeta < 0, where the rays are rotated towards the
/// imaginary axis so that the kernel decays in both r and zeta.
EvalResult wright_integral(const WrightParams& params, double zeta, const QuadratureConfig& cfg = {});

/// Series first; on NonConvergence falls back to wright_integral when the
/// parameters allow it.
EvalResult evaluate_wright(const WrightParams& params, double z, const EvalConfig& cfg = {});

/// M_nu(z) with closed forms, series and quadrature fallback.
EvalResult evaluate_m_wright(double nu, double z, const EvalConfig& cfg = {});

/// n-th derivative in z, W(lambda, n lambda + mu; z), with fallback.
EvalResult evaluate_wright_derivative(const WrightParams& params, double z, int order,
                                      const EvalConfig& cfg = {});

}  // namespace fracgreen
