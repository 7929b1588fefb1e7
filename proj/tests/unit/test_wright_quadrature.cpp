#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "fracgreen/errors.hpp"
#include "fracgreen/wright_quadrature.hpp"
#include "frozen.hpp"
#include "oracles.hpp"

using namespace fracgreen;
using oracle::rel_err;

namespace {

constexpr double pi = 3.14159265358979323846;
const double betas[] = {0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0};

}  // namespace

TEST(Theorem2Kernel, Examples) {
  EXPECT_EQ(theorem2_kernel(-0.5, 0.0, 1.0), 0.0);
  EXPECT_NEAR(theorem2_kernel(-0.5, 1.0, 1.0), -std::exp(-1.0) * std::sin(1.0), 1e-15);
  EXPECT_NEAR(theorem2_kernel(-0.25, 1.0, 1.0), frozen::kernel_m025_1_1, 1e-15);
  EXPECT_THROW(theorem2_kernel(0.25, 1.0, 1.0), Error);
  EXPECT_THROW(theorem2_kernel(-0.25, 1.0, 0.0), Error);
}

TEST(IntegralWright, Examples) {
  for (double beta : {0.25, 0.5, 0.8, 1.0}) {
    EXPECT_NEAR(integral_wright(beta, 0.0).value, 1.0, 1e-12);
    EXPECT_NEAR(integral_wright_raw(beta, 0.0).value, 0.5, 1e-12);
  }
  EXPECT_NEAR(integral_wright(1.0, 2.0).value, frozen::erfc_1, 1e-10);
  EXPECT_NEAR(integral_wright(0.5, 1.5).value, frozen::wright_m025_1_m15, 1e-10);
  EXPECT_EQ(integral_wright(0.5, 1.5).method, Method::quadrature);
  EXPECT_THROW(integral_wright(0.0, 1.0), Error);
  EXPECT_THROW(integral_wright(1.5, 1.0), Error);
}

TEST(IntegralWright, OffsetIsConstantHalf) {
  for (double beta : betas) {
    std::vector<double> diffs;
    for (int i = 0; i <= 20; ++i) {
      const double z = 0.25 * i;
      const double series = evaluate_wright(WrightParams(-beta / 2.0, 1.0), -z).value;
      diffs.push_back(series - integral_wright_raw(beta, z).value);
    }
    const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / diffs.size();
    double ss = 0.0;
    for (double d : diffs) ss += (d - mean) * (d - mean);
    EXPECT_LT(std::sqrt(ss / (diffs.size() - 1)), 1e-6) << beta;
    EXPECT_NEAR(mean, integral_wright_offset, 1e-9) << beta;
  }
}

TEST(IntegralWright, PrintedPositiveBranchOnlyHoldsAtBetaOne) {
  for (double z : {0.5, 2.0, 4.0}) {
    EXPECT_NEAR(integral_wright_printed(1.0, z).value, integral_wright_raw(1.0, z).value, 1e-10);
  }
  // For beta < 1 the printed z >= 0 branch departs from the series by a
  // z-dependent amount (about 60 at beta = 1/4, z = 5).
  const double series = evaluate_wright(WrightParams(-0.125, 1.0), -5.0).value;
  EXPECT_GT(std::abs(integral_wright_printed(0.25, 5.0).value + integral_wright_offset - series), 1.0);
  // The negative branch is the same formula as the raw value.
  EXPECT_NEAR(integral_wright_printed(0.5, -1.0).value, integral_wright_raw(0.5, -1.0).value, 1e-14);
}

TEST(IntegralWright, ContinuousAcrossZero) {
  // The two sides use different branches of the representation; whatever
  // they differ by beyond the function's own change is a jump.
  for (double beta : betas) {
    const WrightParams p(-beta / 2.0, 1.0);
    const double step = integral_wright(beta, 1e-4).value - integral_wright(beta, -1e-4).value;
    const double change = wright(p, -1e-4).value - wright(p, 1e-4).value;
    EXPECT_LT(std::abs(step - change), 1e-8) << beta;
  }
}

TEST(IntegralWright, NegativeArgumentMatchesSeries) {
  for (double beta : betas) {
    for (double z : {-0.5, -1.5, -3.0}) {
      const double series = wright(WrightParams(-beta / 2.0, 1.0), -z).value;
      EXPECT_LT(rel_err(integral_wright(beta, z).value, series), 1e-9) << beta << ' ' << z;
    }
  }
}

TEST(IntegralWright, DecreasingToZero) {
  for (double beta : betas) {
    double previous = INFINITY;
    for (double z = 0.0; z <= 10.0; z += 0.1) {
      const double v = integral_wright(beta, z).value;
      EXPECT_LT(v, previous) << beta << ' ' << z;
      previous = v;
    }
    EXPECT_LT(previous, 0.05);
  }
}

TEST(MWrightIntegral, Examples) {
  EXPECT_NEAR(m_wright_integral(0.5, 1.0).value, frozen::m_wright_half_1, 1e-10);
  EXPECT_NEAR(m_wright_integral(0.5, 0.0).value, 1.0 / std::sqrt(pi), 1e-10);
  EXPECT_NEAR(m_wright_integral(0.75, 2.0).value, frozen::m_wright_075_2, 1e-9);
  EXPECT_NEAR(m_wright_integral(0.75, 2.0).value, wright(WrightParams(-0.75, 0.25), -2.0).value, 1e-6);
  EXPECT_THROW(m_wright_integral(0.5, -1.0), Error);
  EXPECT_THROW(m_wright_integral(1.0, 1.0), Error);
}

TEST(MWrightIntegral, LuchkoKernelAgreesWithSeries) {
  for (double nu : {0.1, 0.25, 1.0 / 3.0, 0.45}) {
    for (double z : {0.0, 0.7, 2.0, 4.0}) {
      EXPECT_LT(rel_err(m_wright_integral(nu, z).value, m_wright(nu, z).value), 1e-9) << nu << ' ' << z;
    }
  }
  // Kernel at u = 0 reduces to sin(pi nu).
  EXPECT_NEAR(luchko_kernel(0.25, 3.0, 0.0), std::sin(pi * 0.25), 1e-15);
}

TEST(WrightIntegral, AgreesWithHighPrecisionSeries) {
  struct Case {
    double lambda, mu, zeta;
  };
  const Case cases[] = {{-0.25, 1.0, -1.0},   {-0.75, 0.25, -2.0}, {-0.6, -0.2, -3.0},
                        {-0.3, 0.5, 2.0},     {-0.5, 1.0, -6.0},   {-0.9, 0.1, -0.5},
                        {-0.125, 0.75, -12.0}, {-1.0 / 3.0, -1.0 / 3.0, -4.0}};
  for (const Case& c : cases) {
    const auto ref = oracle::wright_series(c.lambda, c.mu, c.zeta, 800);
    ASSERT_LT(ref.truncation_bound, 1e-25);
    const EvalResult r = wright_integral(WrightParams(c.lambda, c.mu), c.zeta);
    EXPECT_NEAR(r.value, ref.value, 1e-10 * std::max(1.0, std::abs(ref.value)) + 1e-13)
        << c.lambda << ' ' << c.mu << ' ' << c.zeta;
  }
  EXPECT_THROW(wright_integral(WrightParams(0.5, 1.0), 1.0), Error);
  EXPECT_THROW(wright_integral(WrightParams(-0.5, 1.5), 1.0), Error);
}

TEST(WrightIntegral, RotatedRays) {
  struct Case {
    double lambda, mu, zeta, ref;
  };
  const Case cases[] = {{-0.75, 0.25, -3.0, frozen::wright_m075_025_m3},
                        {-0.8, 0.2, -3.0, frozen::wright_m08_02_m3},
                        {-0.6, 1.0, -5.0, frozen::wright_m06_1_m5},
                        {-0.75, -0.5, -3.0, frozen::wright_m075_m05_m3}};
  for (const Case& c : cases) {
    const EvalResult r = wright_integral(WrightParams(c.lambda, c.mu), c.zeta);
    EXPECT_NEAR(r.value, c.ref, 1e-12) << c.lambda << ' ' << c.mu;
    if (c.ref > 1e-4) EXPECT_LT(rel_err(r.value, c.ref), 1e-8);
    EXPECT_LE(std::abs(r.value - c.ref), r.abs_error_estimate + 1e-15);
  }
}

TEST(EvaluateWright, FallsBackToQuadratureUnderCancellation) {
  // W(-1/2, 1/2; -z) = exp(-z^2/4)/sqrt(pi); the series cancels for large z.
  const WrightParams half(-0.5, 0.5);
  for (double z : {8.0, 12.0, 30.0}) {
    const EvalResult r = evaluate_wright(half, -z);
    EXPECT_EQ(r.method, Method::quadrature) << z;
    EXPECT_NEAR(r.value, std::exp(-z * z / 4.0) / std::sqrt(pi), 1e-12) << z;
  }
  EXPECT_EQ(evaluate_wright(half, -1.0).method, Method::series);
  const EvalResult r = evaluate_wright(WrightParams(-0.75, 0.25), -3.0);
  EXPECT_EQ(r.method, Method::quadrature);
  EXPECT_LT(rel_err(r.value, frozen::wright_m075_025_m3), 1e-8);
  // Outside the integral's parameter range the series error propagates.
  SeriesConfig capped;
  capped.max_terms = 4;
  EXPECT_THROW(evaluate_wright(WrightParams(0.5, 1.0), 10.0, {capped, {}}), NonConvergence);
}

TEST(EvaluateWright, DerivativeFallback) {
  const WrightParams p(-0.25, 1.0);
  const double fd = oracle::central_difference([&](double z) { return evaluate_wright(p, z).value; }, -40.0, 1e-4);
  EXPECT_NEAR(evaluate_wright_derivative(p, -40.0, 1).value, fd, 1e-8);
}
