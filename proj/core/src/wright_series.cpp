#include "fracgreen/wright_series.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fracgreen/errors.hpp"
#include "fracgreen/special.hpp"

namespace fracgreen {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

std::string describe(const WrightParams& p, double z) {
  std::ostringstream os;
  os.precision(17);
  os << "W(" << p.lambda() << ", " << p.mu() << "; " << z << ")";
  return os.str();
}

// Index past which |z|^k / k!^(1+lambda) is decreasing.
double peak_index(double lambda, double z) {
  return std::pow(std::abs(z), 1.0 / (1.0 + lambda)) + 1.0;
}

}  // namespace

WrightParams::WrightParams(double lambda, double mu) : lambda_(lambda), mu_(mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    raise(ErrorKind::InvalidArgument, "Wright parameters must be finite");
  }
  if (!(lambda > -1.0)) {
    raise(ErrorKind::InvalidArgument, "Wright series requires lambda > -1");
  }
}

void SeriesConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !std::isfinite(rel_tol) || !std::isfinite(abs_tol)) {
    raise(ErrorKind::InvalidArgument, "series tolerances must be positive and finite");
  }
  if (max_terms < 3) raise(ErrorKind::InvalidArgument, "series needs at least 3 terms");
  if (!(max_cancellation >= 1.0)) {
    raise(ErrorKind::InvalidArgument, "max_cancellation must be >= 1");
  }
}

EvalResult wright(const WrightParams& params, double z, const SeriesConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(z)) raise(ErrorKind::InvalidArgument, "Wright argument must be finite");

  const double lambda = params.lambda();
  const double mu = params.mu();

  if (z == 0.0) {
    return {special::rgamma(mu), 0.0, 1, Method::series};
  }

  const double log_abs_z = std::log(std::abs(z));
  const double k_peak = peak_index(lambda, z);

  double sum = 0.0;
  double comp = 0.0;  // Neumaier compensation
  double abs_sum = 0.0;
  double rounding = 0.0;
  double power = 1.0;  // z^k / k!, switched to log form on under/overflow
  bool log_power = false;
  double log_power_abs = 0.0;
  int small_run = 0;
  double tail = 0.0;

  for (int k = 0; k < cfg.max_terms; ++k) {
    if (k > 0) {
      if (!log_power) {
        power *= z / k;
        if (!std::isnormal(power)) {
          log_power = true;
          log_power_abs = k * log_abs_z - std::lgamma(k + 1.0);
        }
      } else {
        log_power_abs += log_abs_z - std::log(static_cast<double>(k));
      }
    }

    const double arg = lambda * k + mu;
    double term;
    if (!log_power && std::abs(arg) < 169.0) {
      term = power * special::rgamma(arg);
    } else {
      const auto lr = special::log_rgamma(arg);
      const int power_sign = (z < 0.0 && (k % 2 == 1)) ? -1 : 1;
      const double lp = log_power ? log_power_abs : std::log(std::abs(power));
      term = lr.sign == 0 ? 0.0 : power_sign * lr.sign * std::exp(lp + lr.log_abs);
    }
    if (!std::isfinite(term)) {
      throw NonConvergence("non-finite term in " + describe(params, z), sum + comp, k);
    }

    // Neumaier summation
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    abs_sum += std::abs(term);
    rounding += (k + 4.0) * eps * std::abs(term);

    const double total = sum + comp;
    if (std::abs(term) <= cfg.rel_tol * std::abs(total) + cfg.abs_tol) {
      ++small_run;
      tail += std::abs(term);
    } else {
      small_run = 0;
      tail = 0.0;
    }

    if (small_run >= 3 && k > k_peak) {
      if (lambda < 0.0 && abs_sum > cfg.max_cancellation * std::abs(total)) {
        throw NonConvergence("cancellation in alternating series for " + describe(params, z) +
                                 " (sum|t|/|S| exceeds guard)",
                             total, k + 1);
      }
      return {total, tail + rounding, k + 1, Method::series};
    }
  }
  throw NonConvergence("term cap reached for " + describe(params, z), sum + comp, cfg.max_terms);
}

EvalResult m_wright(double nu, double z, const SeriesConfig& cfg) {
  if (!(nu >= 0.0 && nu < 1.0)) {
    raise(ErrorKind::InvalidArgument, "M-Wright order must satisfy 0 <= nu < 1");
  }
  if (!std::isfinite(z)) raise(ErrorKind::InvalidArgument, "M-Wright argument must be finite");
  if (nu == 0.0) {
    const double v = std::exp(-z);
    return {v, 2.0 * eps * v, 0, Method::closed_form};
  }
  if (nu == 0.5) {
    const double v = std::exp(-0.25 * z * z) / std::sqrt(special::pi);
    return {v, 4.0 * eps * v, 0, Method::closed_form};
  }
  return wright(WrightParams(-nu, 1.0 - nu), -z, cfg);
}

EvalResult wright_derivative(const WrightParams& params, double z, int order,
                             const SeriesConfig& cfg) {
  if (order < 1) raise(ErrorKind::InvalidArgument, "derivative order must be >= 1");
  return wright(WrightParams(params.lambda(), params.lambda() * order + params.mu()), z, cfg);
}

EvalResult wright_antiderivative(const WrightParams& params, double z, const SeriesConfig& cfg) {
  return wright(WrightParams(params.lambda(), params.mu() - params.lambda()), z, cfg);
}

double bessel_j_relation_check(double nu, double z, const SeriesConfig& cfg) {
  if (!(z > 0.0)) raise(ErrorKind::InvalidArgument, "Bessel relation check needs z > 0");
  const double w = wright(WrightParams(1.0, nu + 1.0), -0.25 * z * z, cfg).value;
  double j;
  if (nu == 0.5) {
    j = std::sqrt(2.0 / (special::pi * z)) * std::sin(z);
  } else {
    j = std::cyl_bessel_j(nu, z);
  }
  return std::abs(w - std::pow(0.5 * z, -nu) * j);
}

}  // namespace fracgreen
