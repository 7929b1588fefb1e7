#pragma once

#include "fracgreen/eval_result.hpp"

namespace fracgreen {

/// Parameters (lambda, mu) of the Wright function
///   W(lambda, mu; z) = sum_k z^k / (k! Gamma(lambda k + mu)),  lambda > -1.
/// Terms whose Gamma argument is a pole contribute zero.
class WrightParams {
 public:
  WrightParams(double lambda, double mu);

  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }

 private:
  double lambda_;
  double mu_;
};

/// Truncation and cancellation policy for the power series.
///
/// Summation stops once three consecutive terms satisfy
/// |t_k| <= rel_tol |S| + abs_tol and the terms are past their peak. For
/// lambda < 0 the series alternates in sign for large arguments; when
/// sum|t_k| exceeds max_cancellation * |S| the result is rejected with
/// NonConvergence so callers can switch to a real-line integral.
struct SeriesConfig {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;
  int max_terms = 10000;
  double max_cancellation = 1e4;

  void validate() const;
};

EvalResult wright(const WrightParams& params, double z, const SeriesConfig& cfg = {});

/// M-Wright (Mainardi) function M_nu(z) = W(-nu, 1-nu; -z), 0 <= nu < 1.
/// nu = 0 (the nu -> 0+ limit) and nu = 1/2 use closed forms:
/// exp(-z) and exp(-z^2/4)/sqrt(pi).
EvalResult m_wright(double nu, double z, const SeriesConfig& cfg = {});

/// d^n/dz^n W(lambda, mu; z) = W(lambda, n lambda + mu; z).
EvalResult wright_derivative(const WrightParams& params, double z, int order,
                             const SeriesConfig& cfg = {});

/// Antiderivative W(lambda, mu - lambda; z). The integration constant is the
/// one carried by the series itself, i.e. the value at z = 0 is
/// 1/Gamma(mu - lambda).
EvalResult wright_antiderivative(const WrightParams& params, double z,
                                 const SeriesConfig& cfg = {});

/// |W(1, nu+1; -z^2/4) - (z/2)^(-nu) J_nu(z)|. For nu = 1/2 the Bessel
/// function is the elementary sqrt(2/(pi z)) sin z; other orders use
/// std::cyl_bessel_j.
double bessel_j_relation_check(double nu, double z, const SeriesConfig& cfg = {});

}  // namespace fracgreen
