#include "fracgreen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "fracgreen/errors.hpp"
#include "fracgreen/fractional_ops.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/laplace.hpp"
#include "fracgreen/special.hpp"
#include "fracgreen/wright_quadrature.hpp"
#include "fracgreen/wright_series.hpp"

namespace fracgreen {

namespace {

using special::pi;

double rel_err(double value, double ref) {
  return ref != 0.0 ? std::abs(value - ref) / std::abs(ref) : std::abs(value);
}

// Ai(x) for x >= 0 through the modified Bessel function K_{1/3}.
double airy_ai(double x) {
  if (x == 0.0) return 0.35502805388781723926;
  const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  return std::sqrt(x / 3.0) * std::cyl_bessel_k(1.0 / 3.0, zeta) / pi;
}

double heat_kernel(double x, double t, double d) {
  return std::exp(-x * x / (4.0 * d * t)) / std::sqrt(4.0 * pi * d * t);
}

struct Measured {
  double value;
  std::string detail;
};

struct Check {
  std::string name;
  double threshold;
  std::function<Measured()> run;
  bool lower_is_better = true;
};

// --- fast checks ----------------------------------------------------------

Measured series_at_zero() {
  double worst = 0.0;
  for (double lambda : {-0.5, -0.25, 0.0, 0.5, 2.0}) {
    for (double mu : {0.25, 1.0, 2.5}) {
      worst = std::max(worst, rel_err(wright(WrightParams(lambda, mu), 0.0).value, 1.0 / std::tgamma(mu)));
    }
  }
  // 1/Gamma vanishes at the poles.
  for (double mu : {0.0, -1.0, -3.0}) {
    worst = std::max(worst, std::abs(wright(WrightParams(0.5, mu), 0.0).value));
  }
  return {worst, "W(l,m;0) = 1/Gamma(m), 0 at poles"};
}

Measured gamma_pole_convention() {
  // W(-1/2, 1/2; -z) has a Gamma pole in every odd term.
  double worst = 0.0;
  for (double z : {0.3, 1.3, 2.7}) {
    const double series = wright(WrightParams(-0.5, 0.5), -z).value;
    worst = std::max(worst, rel_err(series, std::exp(-z * z / 4.0) / std::sqrt(pi)));
  }
  return {worst, "series W(-1/2,1/2;-z) vs exp(-z^2/4)/sqrt(pi)"};
}

Measured exponential_limit() {
  // |W(0,1;z) - e^z| measured in units of the reported error estimate.
  double worst = 0.0;
  for (double z = -20.0; z <= 20.0; z += 2.5) {
    const EvalResult r = wright(WrightParams(0.0, 1.0), z);
    const double bound = r.abs_error_estimate + 4.0 * 2.2e-16 * std::exp(z);
    worst = std::max(worst, std::abs(r.value - std::exp(z)) / bound);
  }
  return {worst, "|W(0,1;z) - e^z| / abs_error_estimate, |z| <= 20"};
}

Measured airy_third() {
  double worst = 0.0;
  for (double z : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
    const double ref = std::pow(3.0, 2.0 / 3.0) * airy_ai(std::pow(3.0, -1.0 / 3.0) * z);
    worst = std::max(worst, rel_err(evaluate_m_wright(1.0 / 3.0, z).value, ref));
  }
  return {worst, "M_{1/3} vs 3^{2/3} Ai(3^{-1/3} z)"};
}

// Five-point central difference.
double derivative_fd(const std::function<double(double)>& f, double z, double h) {
  return (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h);
}

Measured derivative_identity() {
  double worst = 0.0;
  for (double lambda : {-0.4, 0.3, 1.5}) {
    for (double mu : {0.5, 1.2}) {
      const WrightParams p(lambda, mu);
      for (double z : {-1.5, 0.4, 2.0}) {
        const double fd = derivative_fd([&](double x) { return wright(p, x).value; }, z, 1e-3);
        worst = std::max(worst, rel_err(wright_derivative(p, z, 1).value, fd));
      }
    }
  }
  return {worst, "d/dz W(l,m;z) vs W(l,l+m;z)"};
}

Measured antiderivative_identity() {
  double worst = 0.0;
  for (double lambda : {-0.4, 0.3, 1.5}) {
    for (double mu : {0.5, 1.2}) {
      const WrightParams p(lambda, mu);
      for (double z : {-1.5, 0.4, 2.0}) {
        const double fd = derivative_fd([&](double x) { return wright_antiderivative(p, x).value; }, z, 1e-3);
        worst = std::max(worst, rel_err(fd, wright(p, z).value));
      }
    }
  }
  return {worst, "d/dz W(l,m-l;z) vs W(l,m;z)"};
}

Measured bessel_relation() {
  double worst = 0.0;
  for (double z : {0.5, 2.0, 5.0}) {
    worst = std::max(worst, bessel_j_relation_check(0.5, z));
    worst = std::max(worst, bessel_j_relation_check(1.0, z));
  }
  return {worst, "W(1,nu+1;-z^2/4) vs (z/2)^-nu J_nu(z)"};
}

// Sample standard deviation of series - raw kernel integral over z.
struct OffsetStats {
  double mean;
  double stddev;
};

OffsetStats offset_stats(double beta, int points) {
  std::vector<double> diffs;
  for (int i = 0; i < points; ++i) {
    const double z = 5.0 * i / (points - 1);
    const double series = evaluate_wright(WrightParams(-beta / 2.0, 1.0), -z).value;
    diffs.push_back(series - integral_wright_raw(beta, z).value);
  }
  const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / points;
  double ss = 0.0;
  for (double d : diffs) ss += (d - mean) * (d - mean);
  return {mean, std::sqrt(ss / (points - 1))};
}

Measured integral_offset(const std::vector<double>& betas, int points) {
  double worst = 0.0;
  std::string detail = "stddev of series - raw kernel integral;";
  for (double beta : betas) {
    const OffsetStats s = offset_stats(beta, points);
    worst = std::max({worst, s.stddev, std::abs(s.mean - integral_wright_offset)});
    detail += " beta=" + std::to_string(beta) + " mean=" + std::to_string(s.mean);
  }
  return {worst, detail};
}

Measured integral_erfc() {
  double worst = 0.0;
  for (double z : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    worst = std::max(worst, std::abs(integral_wright(1.0, z).value - std::erfc(z / 2.0)));
  }
  return {worst, "beta = 1 integral Wright vs erfc(z/2)"};
}

Measured luchko_vs_series() {
  double worst = 0.0;
  for (double nu : {0.25, 0.4, 0.75}) {
    for (double z : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, rel_err(m_wright_integral(nu, z).value, m_wright(nu, z).value));
    }
  }
  return {worst, "real-line M_nu integral vs series"};
}

Measured derivative_form_equivalence(int samples_per_k) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> beta_dist(0.2, 1.0);
  std::uniform_real_distribution<double> pos(0.3, 3.0);
  double worst = 0.0;
  int used = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < samples_per_k; ++i) {
      std::vector<double> n(k), r(k);
      for (int j = 0; j < k; ++j) {
        n[j] = unit(rng);
        r[j] = 2.0 * unit(rng);
      }
      if (std::sqrt(std::inner_product(n.begin(), n.end(), n.begin(), 0.0)) < 0.1) n[0] = 1.0;
      const GreenSpec spec(beta_dist(rng), pos(rng), UnitVector::normalized(n));
      const double t = pos(rng);
      if (std::abs(spec.direction().dot(r)) <= 1e-3) continue;
      const double explicit_form = green_kd(r, t, spec).value;
      const double derivative_form = green_kd_derivative_form(r, t, spec).value;
      worst = std::max(worst, rel_err(derivative_form, explicit_form));
      ++used;
    }
  }
  return {worst, std::to_string(used) + " random points, derivative vs explicit form"};
}

Measured heat_limit() {
  double worst = 0.0;
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    for (double d : {1.0, 2.0}) {
      worst = std::max(worst, rel_err(green_1d(x, 1.0, 1.0, d).value, heat_kernel(x, 1.0, d)));
    }
  }
  return {worst, "beta = 1 Green function vs heat kernel"};
}

Measured normalization(const std::vector<double>& betas, const std::vector<double>& times,
                       const std::vector<double>& diffusivities) {
  double worst = 0.0;
  for (double beta : betas) {
    for (double t : times) {
      for (double d : diffusivities) {
        worst = std::max(worst, std::abs(normalization_1d(beta, d, t).value - 1.0));
      }
    }
  }
  return {worst, "|mass of green_1d - 1|"};
}

Measured hyperplane_symmetry() {
  const GreenSpec spec(0.6, 1.5, UnitVector::normalized({1.0, 2.0, -0.5}));
  const std::vector<double> r{0.4, 0.3, -0.2};
  const std::vector<double> minus_r{-0.4, -0.3, 0.2};
  // Shift along a vector orthogonal to n: (2, -1, 0) . (1, 2, -0.5) = 0.
  const std::vector<double> shifted{0.4 + 2.0, 0.3 - 1.0, -0.2};
  const double g = green_kd(r, 0.8, spec).value;
  const double worst = std::max(rel_err(green_kd(minus_r, 0.8, spec).value, g),
                                rel_err(green_kd(shifted, 0.8, spec).value, g));
  return {worst, "reflection and in-plane shift invariance"};
}

Measured pair2(const std::vector<double>& nus, const std::vector<double>& ks,
               const std::vector<double>& s_grid) {
  double worst = 0.0;
  for (double nu : nus) {
    for (double k : ks) {
      PairOptions opt;
      opt.spot_times = {};
      worst = std::max(worst, verify_pair(2, nu, k, s_grid, opt).max_rel_discrepancy);
    }
  }
  return {worst, "pair 2 forward transform vs s^{nu-1} exp(-k s^nu)"};
}

Measured pair3_convention() {
  const std::vector<double> s_grid{1.0, 2.0};
  PairOptions opt;
  opt.mu = 0.5;
  const PairCheck c = verify_pair(3, 0.5, 1.0, s_grid, opt);
  std::string detail = "nu = mu = 1/2: printed " + std::to_string(c.printed_discrepancy) +
                       ", negated " + std::to_string(c.negated_discrepancy);
  return {std::max(c.max_rel_discrepancy, c.inverse_discrepancy), detail};
}

struct InversionCase {
  int k;
  double beta;
  double t;
  double u;
};

Measured green_hat_inversion(const std::vector<InversionCase>& cases) {
  double worst = 0.0;
  for (const InversionCase& c : cases) {
    std::vector<double> n(c.k, 0.0), r(c.k, 0.0);
    n[0] = 1.0;
    r[0] = c.u;
    const GreenSpec spec(c.beta, 1.0, UnitVector(n));
    const double inv = talbot_inverse([&](std::complex<double> s) { return green_hat_kd(s, c.u, spec); }, c.t);
    worst = std::max(worst, rel_err(inv, green_kd(r, c.t, spec).value));
  }
  return {worst, std::to_string(cases.size()) + " inversions of the Laplace-domain solution"};
}

Measured caputo_linear() {
  const TimeGrid grid(0.0, 2.0, 200);
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = grid.node(static_cast<int>(i));
  double worst = 0.0;
  for (double beta : {0.25, 0.5, 0.9}) {
    const auto d = caputo_derivative(f, beta, grid);
    for (int i = 1; i <= grid.steps(); ++i) {
      const double exact = std::pow(grid.node(i), 1.0 - beta) / std::tgamma(2.0 - beta);
      worst = std::max(worst, rel_err(d[i - 1], exact));
    }
  }
  return {worst, "L1 Caputo derivative of t (exact for linear data)"};
}

ResidualProfile pde_profile(double beta, double d, double x, double h) {
  const GreenSpec spec(beta, d, UnitVector({1.0}));
  const double t_end = 2.0;
  const TimeGrid grid(0.0, t_end, static_cast<int>(std::lround(t_end / h)));
  ResidualOptions opt;
  opt.window_start = 0.5;
  return pde_residual_1d(spec, x, grid, opt);
}

Measured pde_residual_fast() {
  const double rel = pde_profile(0.5, 1.0, 1.0, 1e-3).relative();
  return {rel, "relative residual, beta=0.5 D=1 x=1 h=1e-3"};
}

// --- full-only checks -----------------------------------------------------

Measured pde_refinement() {
  double worst_ratio = 1e300;
  std::string detail;
  for (auto [beta, d, x] : {std::tuple{0.5, 1.0, 1.0}, std::tuple{0.75, 2.0, 0.5}}) {
    const double coarse = pde_profile(beta, d, x, 2e-3).relative();
    const double fine = pde_profile(beta, d, x, 1e-3).relative();
    worst_ratio = std::min(worst_ratio, coarse / fine);
    detail += "beta=" + std::to_string(beta) + " h=1e-3 rel=" + std::to_string(fine) + "; ";
  }
  return {worst_ratio, detail + "min ratio when halving h"};
}

Measured pde_residual_second() {
  return {pde_profile(0.75, 2.0, 0.5, 1e-3).relative(), "relative residual, beta=0.75 D=2 x=0.5"};
}

ResidualProfile factor_profile(double beta, double d, double x, double h, FactorSign sign) {
  const GreenSpec spec(beta, d, UnitVector({1.0}));
  const TimeGrid grid(0.0, 2.0, static_cast<int>(std::lround(2.0 / h)));
  ResidualOptions opt;
  opt.window_start = 0.5;
  return factorization_residual_1d(spec, x, grid, sign, opt);
}

Measured factorization_matched() {
  double worst = 0.0;
  for (auto [beta, d, x] : {std::tuple{0.5, 1.0, 1.0}, std::tuple{0.75, 2.0, 0.5}}) {
    worst = std::max(worst, factor_profile(beta, d, x, 1e-3, FactorSign::plus).relative());
    worst = std::max(worst, factor_profile(beta, d, -x, 1e-3, FactorSign::minus).relative());
  }
  return {worst, "half-order factor residual with the matching sign"};
}

Measured factorization_refinement() {
  double worst_ratio = 1e300;
  for (auto [beta, d, x] : {std::tuple{0.5, 1.0, 1.0}, std::tuple{0.75, 2.0, 0.5}}) {
    const double coarse = factor_profile(beta, d, x, 2e-3, FactorSign::plus).relative();
    const double fine = factor_profile(beta, d, x, 1e-3, FactorSign::plus).relative();
    worst_ratio = std::min(worst_ratio, coarse / fine);
  }
  return {worst_ratio, "factor residual reduction when halving h"};
}

Measured factorization_negative_control() {
  double worst_ratio = 1e300;
  for (auto [beta, d, x] : {std::tuple{0.5, 1.0, 1.0}, std::tuple{0.75, 2.0, 0.5}}) {
    const double matched = factor_profile(beta, d, x, 1e-3, FactorSign::plus).relative();
    const double wrong = factor_profile(beta, d, x, 1e-3, FactorSign::minus).relative();
    worst_ratio = std::min(worst_ratio, wrong / matched);
  }
  return {worst_ratio, "wrong-sign residual / matched residual"};
}

Measured l1_order() {
  // f = t^2 has exact Caputo derivative 2 t^{2-beta} / Gamma(3-beta); the L1
  // error should fall by about 2^{2-beta} per halving.
  double worst = 1e300;
  std::string detail;
  for (double beta : {0.3, 0.5, 0.8}) {
    std::vector<double> errs;
    for (int steps : {100, 200, 400}) {
      const TimeGrid grid(0.0, 1.0, steps);
      std::vector<double> f(grid.size());
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(grid.node(static_cast<int>(i)), 2);
      const auto d = caputo_derivative(f, beta, grid);
      const double exact = 2.0 / std::tgamma(3.0 - beta);
      errs.push_back(std::abs(d.back() - exact));
    }
    const double order = std::log2(errs[1] / errs[2]);
    const double deficit = order / (2.0 - beta);
    worst = std::min(worst, deficit);
    detail += "beta=" + std::to_string(beta) + " order=" + std::to_string(order) + "; ";
  }
  return {worst, detail + "observed / expected order"};
}

Measured round_trip() {
  double worst = 0.0;
  const std::vector<std::function<double(double)>> fs{
      [](double t) { return std::exp(-t); }, [](double t) { return t * std::exp(-t); }};
  const std::vector<LaplaceFunction> hats{
      [](std::complex<double> s) { return 1.0 / (s + 1.0); },
      [](std::complex<double> s) { return 1.0 / ((s + 1.0) * (s + 1.0)); }};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    // Forward transform matches the closed form on real s ...
    for (double s : {0.5, 1.0, 3.0}) {
      worst = std::max(worst, std::abs(laplace_forward(fs[i], s).value - hats[i](s).real()));
    }
    // ... and the closed form inverts back to f.
    for (double t = 0.1; t <= 5.0; t += 0.35) {
      worst = std::max(worst, std::abs(talbot_inverse(hats[i], t) - fs[i](t)));
    }
  }
  return {worst, "forward transform and inversion of e^-t, t e^-t"};
}

Measured caputo_transform() {
  double worst = 0.0;
  worst = std::max(worst, caputo_transform_check(Polynomial{{1.0}}, 0.5, 1.0).discrepancy);
  worst = std::max(worst, caputo_transform_check(Polynomial{{0.0, 1.0}}, 0.5, 1.0).discrepancy);
  worst = std::max(worst, caputo_transform_check(Polynomial{{0.0, 0.0, 1.0}}, 0.25, 2.0).discrepancy);
  return {worst, "Laplace transform of the L1 Caputo derivative"};
}

std::vector<InversionCase> inversion_cases(bool full) {
  if (!full) return {{2, 0.5, 1.0, 0.7}};
  std::vector<InversionCase> cases;
  const double betas[] = {0.5, 0.8};
  const double ts[] = {0.5, 2.0};
  for (int k = 1; k <= 3; ++k) {
    for (double beta : betas) {
      for (double t : ts) cases.push_back({k, beta, t, 0.3 + 0.4 * k});
    }
  }
  return cases;
}

}  // namespace

std::vector<CheckResult> run_verification(Suite suite) {
  const bool full = suite == Suite::full;
  std::vector<Check> checks{
      {"series_at_zero", 1e-14, series_at_zero},
      {"gamma_pole_convention", 1e-12, gamma_pole_convention},
      {"exponential_limit", 1.0, exponential_limit},
      {"m_wright_airy", 1e-8, airy_third},
      {"derivative_identity", 1e-6, derivative_identity},
      {"antiderivative_identity", 1e-6, antiderivative_identity},
      {"bessel_relation", 1e-10, bessel_relation},
      {"integral_wright_offset", 1e-6,
       [full] {
         return full ? integral_offset({0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0}, 21) : integral_offset({0.5}, 6);
       }},
      {"integral_wright_erfc", 1e-6, integral_erfc},
      {"m_wright_integral", 1e-8, luchko_vs_series},
      {"derivative_form_equivalence", 1e-8, [full] { return derivative_form_equivalence(full ? 100 : 10); }},
      {"heat_kernel_limit", 1e-10, heat_limit},
      {"normalization_1d", 1e-6,
       [full] {
         return full ? normalization({0.25, 0.5, 0.75, 1.0}, {0.5, 1.0, 2.0}, {1.0, 3.0})
                     : normalization({0.5}, {1.0}, {1.0});
       }},
      {"hyperplane_symmetry", 1e-12, hyperplane_symmetry},
      {"laplace_pair_2", 1e-5,
       [full] {
         return full ? pair2({0.3, 0.5, 0.7}, {0.5, 1.0, 2.0}, {0.5, 1.0, 2.0, 4.0})
                     : pair2({0.5}, {1.0}, {1.0});
       }},
      {"green_hat_inversion", 1e-5, [full] { return green_hat_inversion(inversion_cases(full)); }},
      {"caputo_linear", 1e-12, caputo_linear},
      {"pde_residual", 5e-3, pde_residual_fast},
  };
  if (full) {
    checks.push_back({"pde_residual_second_case", 5e-3, pde_residual_second});
    checks.push_back({"pde_refinement", 1.5, pde_refinement, false});
    checks.push_back({"factorization_residual", 5e-3, factorization_matched});
    checks.push_back({"factorization_refinement", 1.5, factorization_refinement, false});
    checks.push_back({"factorization_negative_control", 10.0, factorization_negative_control, false});
    checks.push_back({"l1_order", 0.9, l1_order, false});
    checks.push_back({"laplace_round_trip", 1e-5, round_trip});
    checks.push_back({"laplace_pair_3", 1e-5, pair3_convention});
    checks.push_back({"caputo_transform", 5e-3, caputo_transform});
  }

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const Check& c : checks) {
    CheckResult r;
    r.name = c.name;
    r.threshold = c.threshold;
    try {
      const Measured m = c.run();
      r.measured = m.value;
      r.detail = m.detail;
      r.passed = std::isfinite(m.value) && (c.lower_is_better ? m.value <= c.threshold : m.value >= c.threshold);
    } catch (const std::exception& e) {
      r.passed = false;
      r.measured = std::numeric_limits<double>::quiet_NaN();
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace fracgreen
