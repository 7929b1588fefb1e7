#pragma once

// Small scalar helpers shared by the evaluation modules.

namespace fracgreen::special {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;

/// True when x is 0, -1, -2, ... (a pole of Gamma).
bool is_gamma_pole(double x) noexcept;

/// 1/Gamma(x), entire; exactly 0 at the poles of Gamma.
double rgamma(double x) noexcept;

/// log|1/Gamma(x)| and its sign, for arguments where rgamma under/overflows.
/// Returns sign 0 at the poles.
struct LogValue {
  double log_abs;
  int sign;
};
LogValue log_rgamma(double x) noexcept;

}  // namespace fracgreen::special
