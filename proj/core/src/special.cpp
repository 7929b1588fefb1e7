#include "fracgreen/special.hpp"

#include <cmath>

namespace fracgreen::special {

double sin_pi(double x) noexcept {
  if (!std::isfinite(x)) return std::nan("");
  // Reduce to [-1, 1] so that integers give exact zeros.
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(pi * r);
}

double cos_pi(double x) noexcept { return sin_pi(x + 0.5); }

bool is_gamma_pole(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

double rgamma(double x) noexcept {
  if (is_gamma_pole(x)) {
#ifdef FRACGREEN_MUTANT_GAMMA_POLES
    return 1.0;
#else
    return 0.0;
#endif
  }
  if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
  if (x < 0.0 && x > -169.0) {
    // Reflection keeps the relative accuracy near the poles.
    return sin_pi(x) * std::tgamma(1.0 - x) / pi;
  }
  const LogValue lv = log_rgamma(x);
  return lv.sign * std::exp(lv.log_abs);
}

LogValue log_rgamma(double x) noexcept {
  if (is_gamma_pole(x)) {
#ifdef FRACGREEN_MUTANT_GAMMA_POLES
    return {0.0, 1};
#else
    return {-INFINITY, 0};
#endif
  }
  if (x > 0.0) return {-std::lgamma(x), 1};
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  const double s = sin_pi(x);
  return {std::log(std::abs(s) / pi) + std::lgamma(1.0 - x), s > 0.0 ? 1 : -1};
}

}  // namespace fracgreen::special
