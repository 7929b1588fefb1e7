#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fracgreen/errors.hpp"
#include "fracgreen/fractional_ops.hpp"
#include "frozen.hpp"
#include "oracles.hpp"

using namespace fracgreen;
using oracle::rel_err;

namespace {

std::vector<double> sample(const TimeGrid& g, double (*f)(double)) {
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(g.node(static_cast<int>(i)));
  return out;
}

double linear(double t) { return t; }
double square(double t) { return t * t; }
double one(double) { return 1.0; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no fracgreen::Error thrown";
  return ErrorKind::InvalidArgument;
}

ResidualProfile pde(double beta, double d, double x, double h) {
  const TimeGrid grid(0.0, 2.0, static_cast<int>(std::lround(2.0 / h)));
  ResidualOptions opt;
  opt.window_start = 0.5;
  return pde_residual_1d(GreenSpec(beta, d, UnitVector({1.0})), x, grid, opt);
}

ResidualProfile factor(double beta, double d, double x, double h, FactorSign sign) {
  const TimeGrid grid(0.0, 2.0, static_cast<int>(std::lround(2.0 / h)));
  ResidualOptions opt;
  opt.window_start = 0.5;
  return factorization_residual_1d(GreenSpec(beta, d, UnitVector({1.0})), x, grid, sign, opt);
}

}  // namespace

TEST(TimeGrid, Validation) {
  EXPECT_THROW(TimeGrid(-1.0, 1.0, 10), Error);
  EXPECT_THROW(TimeGrid(1.0, 1.0, 10), Error);
  EXPECT_THROW(TimeGrid(0.0, 1.0, 0), Error);
  const TimeGrid g(0.5, 1.5, 4);
  EXPECT_DOUBLE_EQ(g.h(), 0.25);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.node(4), 1.5);
}

TEST(Caputo, Examples) {
  const TimeGrid g(0.0, 1.0, 1000);
  for (double v : caputo_derivative(sample(g, one), 0.37, g)) EXPECT_EQ(v, 0.0);
  EXPECT_NEAR(caputo_derivative(sample(g, linear), 0.5, g).back(), frozen::two_over_sqrt_pi, 1e-3);
  EXPECT_NEAR(caputo_derivative(sample(g, square), 0.25, g).back(), frozen::two_over_gamma_275, 1e-3);
}

TEST(Caputo, Errors) {
  const TimeGrid g(0.0, 1.0, 10);
  const auto f = sample(g, linear);
  EXPECT_EQ(kind_of([&] { caputo_derivative(f, 0.0, g); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([&] { caputo_derivative(f, 1.5, g); }), ErrorKind::OrderOutOfRange);
  const std::vector<double> short_f(5, 1.0);
  EXPECT_EQ(kind_of([&] { caputo_derivative(short_f, 0.5, g); }), ErrorKind::DimensionMismatch);
}

TEST(Caputo, OrderOneIsBackwardDifference) {
  const TimeGrid g(0.0, 1.0, 50);
  const auto f = sample(g, square);
  const auto d = caputo_derivative(f, 1.0, g);
  for (int i = 1; i <= g.steps(); ++i) EXPECT_NEAR(d[i - 1], (f[i] - f[i - 1]) / g.h(), 1e-12);
}

TEST(Caputo, LinearInSamples) {
  const TimeGrid g(0.2, 1.4, 300);
  const auto a = sample(g, square);
  const auto b = sample(g, [](double t) { return std::sin(3 * t); });
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 2.5 * a[i] - 0.75 * b[i];
  const auto da = caputo_derivative(a, 0.6, g), db = caputo_derivative(b, 0.6, g), dc = caputo_derivative(c, 0.6, g);
  for (std::size_t i = 0; i < dc.size(); ++i) EXPECT_NEAR(dc[i], 2.5 * da[i] - 0.75 * db[i], 1e-12);
}

TEST(Caputo, L1ConvergenceOrder) {
  std::vector<double> errs;
  for (double h : {1e-2, 5e-3, 2.5e-3}) {
    const TimeGrid g(0.0, 1.0, static_cast<int>(std::lround(1.0 / h)));
    errs.push_back(std::abs(caputo_derivative(sample(g, square), 0.5, g).back() - 2.0 / std::tgamma(2.5)));
  }
  // The error at fixed t is h^{2-beta} E(t/h) with |E| slowly increasing, so
  // the observed order approaches 2 - beta = 1.5 from below.
  const double first = std::log2(errs[0] / errs[1]);
  const double second = std::log2(errs[1] / errs[2]);
  EXPECT_NEAR(first, 1.5, 0.01);
  EXPECT_NEAR(second, 1.5, 0.01);
  EXPECT_GT(second, first);
}

TEST(RiemannLiouville, Examples) {
  const TimeGrid g(0.0, 1.0, 100);
  EXPECT_NEAR(rl_integral(sample(g, one), 1.0, g).back(), 1.0, 1e-14);
  EXPECT_NEAR(rl_integral(sample(g, one), 0.5, g).back(), frozen::two_over_sqrt_pi, 1e-13);
  EXPECT_NEAR(rl_integral(sample(g, linear), 0.5, g).back(), frozen::inv_gamma_25, 1e-13);
  EXPECT_EQ(rl_integral(sample(g, one), 0.5, g).front(), 0.0);
  EXPECT_EQ(kind_of([&] { rl_integral(sample(g, one), 0.0, g); }), ErrorKind::OrderOutOfRange);
}

TEST(RiemannLiouville, Semigroup) {
  const TimeGrid g(0.0, 1.0, 400);
  const auto f = sample(g, linear);
  const auto twice = rl_integral(rl_integral(f, 0.5, g), 0.5, g);
  const auto once = rl_integral(f, 1.0, g);
  for (std::size_t i = 0; i < once.size(); i += 40) EXPECT_NEAR(twice[i], once[i], 1e-5);
  EXPECT_NEAR(once.back(), 0.5, 1e-12);
}

TEST(PdeResidual, HeatEquation) {
  // beta = 1 uses the backward difference, whose error (h/2) G_tt peaks at
  // 2.4e-4 near t = 0.5 for x = 1; from t = 1 on it is below 1e-4.
  const TimeGrid grid(0.0, 2.0, 2000);
  ResidualOptions opt;
  opt.window_start = 1.0;
  const GreenSpec heat(1.0, 1.0, UnitVector({1.0}));
  EXPECT_LE(pde_residual_1d(heat, 1.0, grid, opt).max_abs_residual, 1e-4);
  EXPECT_LE(pde(1.0, 1.0, 1.0, 1e-3).relative(), 5e-3);
}

TEST(PdeResidual, FractionalCasesConverge) {
  for (auto [beta, d, x] : {std::tuple{0.5, 1.0, 1.0}, std::tuple{0.75, 2.0, 0.5}}) {
    const double fine = pde(beta, d, x, 1e-3).relative();
    const double coarse = pde(beta, d, x, 2e-3).relative();
    EXPECT_LE(fine, 5e-3) << beta;
    EXPECT_GE(coarse / fine, 1.5) << beta;
  }
}

TEST(PdeResidual, ReportsWindowOnly) {
  const auto p = pde(0.5, 1.0, 1.0, 1e-2);
  EXPECT_GE(p.times.front(), 0.5 - 1e-12);
  EXPECT_EQ(p.times.size(), p.residual.size());
  EXPECT_EQ(p.times.size(), p.time_term.size());
}

TEST(PdeResidual, Errors) {
  const TimeGrid grid(0.0, 1.0, 100);
  EXPECT_EQ(kind_of([&] { pde_residual_1d(GreenSpec(0.5, 1.0, UnitVector({1.0})), 0.0, grid); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { pde_residual_1d(GreenSpec(0.5, 1.0, UnitVector({0.0, 1.0})), 1.0, grid); }),
            ErrorKind::DimensionMismatch);
}

TEST(FactorizationResidual, HeatKernel) {
  EXPECT_LE(factor(1.0, 1.0, 1.0, 1e-3, FactorSign::plus).relative(), 5e-3);
  EXPECT_LE(factor(1.0, 1.0, -1.0, 1e-3, FactorSign::minus).relative(), 5e-3);
}

TEST(FactorizationResidual, FractionalCaseConverges) {
  const double fine = factor(0.5, 1.0, 2.0, 1e-3, FactorSign::plus).relative();
  const double coarse = factor(0.5, 1.0, 2.0, 2e-3, FactorSign::plus).relative();
  EXPECT_LE(fine, 1e-2);
  EXPECT_GE(coarse / fine, 1.5);
}

TEST(FactorizationResidual, WrongSignDoesNotVanish) {
  for (double beta : {0.5, 1.0}) {
    const double matched = factor(beta, 1.0, 1.0, 1e-3, FactorSign::plus).relative();
    const double wrong = factor(beta, 1.0, 1.0, 1e-3, FactorSign::minus).relative();
    EXPECT_GE(wrong, 10.0 * matched) << beta;
  }
}
