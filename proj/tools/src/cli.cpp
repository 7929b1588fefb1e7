#include "fracgreen_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/verify.hpp"
#include "fracgreen/wright_series.hpp"

namespace fracgreen::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EvalConfig make_config(CLI::Option* abs_opt, double abs_tol, CLI::Option* rel_opt, double rel_tol,
                       const char* env_tol) {
  EvalConfig cfg;
  std::optional<double> env;
  if (env_tol != nullptr) {
    double v = 0.0;
    if (!parse_double(env_tol, v) || !(v > 0.0)) {
      throw UsageError(std::string("FRACGREEN_TOL is not a positive decimal: '") + env_tol + "'");
    }
    env = v;
  }
  const bool have_abs = abs_opt->count() > 0 || env.has_value();
  const bool have_rel = rel_opt->count() > 0 || env.has_value();
  if (!have_abs && !have_rel) return cfg;
  const double a = abs_opt->count() > 0 ? abs_tol : env.value_or(cfg.quadrature.abs_tol);
  const double r = rel_opt->count() > 0 ? rel_tol : env.value_or(cfg.quadrature.rel_tol);
  if (!(a > 0.0) || !(r > 0.0)) throw UsageError("tolerances must be positive");
  cfg.quadrature = QuadratureConfig::with_tolerances(a, r, cfg.quadrature.max_nodes);
  if (have_rel) cfg.series.rel_tol = r;
  return cfg;
}

// Function parameters shared by eval and table.
struct Params {
  double lambda = 0.0, mu = 0.0, nu = 0.0, beta = 0.0, d = 1.0, t = 1.0;
  std::vector<double> n;
  std::vector<double> r;
  std::map<std::string, CLI::Option*> opts;

  void add(CLI::App* app) {
    opts["lambda"] = app->add_option("--lambda", lambda, "Wright lambda (> -1)");
    opts["mu"] = app->add_option("--mu", mu, "Wright mu");
    opts["nu"] = app->add_option("--nu", nu, "M-Wright order, 0 <= nu < 1");
    opts["beta"] = app->add_option("--beta", beta, "fractional order, 0 < beta <= 1");
    opts["D"] = app->add_option("--D", d, "diffusivity (default 1)");
    opts["t"] = app->add_option("--t", t, "time (default 1)");
    opts["n"] = app->add_option("--n", n, "unit direction components")->delimiter(',');
    opts["r"] = app->add_option("--r", r, "position components (eval green_kd)")->delimiter(',');
  }

  void require(std::initializer_list<const char*> keys, const std::string& fn) const {
    for (const char* k : keys) {
      if (opts.at(k)->count() == 0) throw UsageError(fn + " needs --" + k);
    }
  }
};

const std::vector<std::string> function_names{"wright", "m_wright", "integral_wright", "green_1d", "green_kd"};

// f(principal argument) for the chosen function: z for the Wright family,
// x for green_1d and u = n.r for green_kd (evaluated at r = u n).
std::function<EvalResult(double)> make_function(const std::string& fn, const Params& p, const EvalConfig& cfg) {
  if (fn == "wright") {
    p.require({"lambda", "mu"}, fn);
    const WrightParams wp(p.lambda, p.mu);
    return [wp, cfg](double z) { return evaluate_wright(wp, z, cfg); };
  }
  if (fn == "m_wright") {
    p.require({"nu"}, fn);
    return [nu = p.nu, cfg](double z) { return evaluate_m_wright(nu, z, cfg); };
  }
  if (fn == "integral_wright") {
    p.require({"beta"}, fn);
    return [beta = p.beta, cfg](double z) { return integral_wright(beta, z, cfg.quadrature); };
  }
  if (fn == "green_1d") {
    p.require({"beta"}, fn);
    return [p, cfg](double x) { return green_1d(x, p.t, p.beta, p.d, cfg); };
  }
  p.require({"beta", "n"}, fn);
  const GreenSpec spec(p.beta, p.d, UnitVector(p.n));
  return [spec, p, cfg](double u) {
    std::vector<double> r(p.n.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = u * p.n[i];
    return green_kd(r, p.t, spec, cfg);
  };
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

std::string csv_string(const std::vector<Row>& rows) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  write_csv(s, rows);
  return s.str();
}

}  // namespace

std::vector<Row> tabulate(const std::function<EvalResult(double)>& f, double start, double stop, int count,
                          unsigned threads) {
  if (count < 2) throw UsageError("grid count must be >= 2");
  if (!(stop > start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw UsageError("grid needs finite start < stop");
  }
  std::vector<Row> rows(static_cast<std::size_t>(count));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::exception_ptr> failures(threads);

  auto work = [&](unsigned w) {
    try {
      for (int i = static_cast<int>(w); i < count; i += static_cast<int>(threads)) {
        const double x = (i == count - 1) ? stop : start + (stop - start) * i / (count - 1);
        const EvalResult r = f(x);
        rows[static_cast<std::size_t>(i)] = {x, r.value, r.abs_error_estimate};
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<std::filesystem::path> write_fig1(const std::filesystem::path& dir, const EvalConfig& cfg) {
  std::filesystem::create_directories(dir);
  struct Curve {
    double beta;
    const char* tag;
  };
  const Curve curves[] = {{0.25, "1_4"}, {1.0 / 3.0, "1_3"}, {0.5, "1_2"}, {2.0 / 3.0, "2_3"}};
  std::vector<std::filesystem::path> paths;
  for (const Curve& c : curves) {
    const auto rows = tabulate([&](double z) { return integral_wright(c.beta, z, cfg.quadrature); }, 0.0, 5.0, 201);
    const auto path = dir / (std::string("integral_wright_beta_") + c.tag + ".csv");
    write_file(path, csv_string(rows));
    paths.push_back(path);
  }
  write_file(dir / "README.txt",
             "Integral Wright function W(-beta/2, 1; -z) for beta = 1/4, 1/3, 1/2, 2/3 on z in [0, 5], 201 points.\n"
             "Values follow the series convention (1 at z = 0): the raw kernel integral 1/2 + (1/pi) int K dr "
             "is shifted by +1/2.\n"
             "Columns: arg = z, value, abs_err = quadrature error estimate.\n");
  return paths;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_tol) {
  CLI::App app{"Wright functions and hyperplanar fractional diffusion Green's functions"};
  app.name("fracgreen");
  app.require_subcommand(1);
  double abs_tol = 0.0, rel_tol = 0.0;
  auto* abs_opt = app.add_option("--abs-tol", abs_tol, "absolute tolerance (overrides FRACGREEN_TOL)");
  auto* rel_opt = app.add_option("--rel-tol", rel_tol, "relative tolerance (overrides FRACGREEN_TOL)");

  auto* eval = app.add_subcommand("eval", "evaluate one function value");
  std::string eval_fn;
  eval->add_option("function", eval_fn)->required()->check(CLI::IsMember(function_names));
  Params eval_p;
  eval_p.add(eval);
  double eval_z = 0.0, eval_x = 0.0;
  auto* z_opt = eval->add_option("--z", eval_z, "argument of the Wright family");
  auto* x_opt = eval->add_option("--x", eval_x, "position for green_1d");

  auto* table = app.add_subcommand("table", "tabulate a function to CSV");
  std::string table_fn, table_out;
  double start = 0.0, stop = 0.0;
  int count = 0;
  table->add_option("function", table_fn)->required()->check(CLI::IsMember(function_names));
  Params table_p;
  table_p.add(table);
  table->add_option("--start", start, "first grid value")->required();
  table->add_option("--stop", stop, "last grid value")->required();
  table->add_option("--count", count, "number of grid points (>= 2)")->required();
  table->add_option("-o,--output", table_out, "CSV path")->required();

  auto* fig1 = app.add_subcommand("fig1", "write the integral Wright curves as CSV");
  std::string fig_dir;
  fig1->add_option("-o,--output-dir", fig_dir, "output directory")->required();

  auto* verify = app.add_subcommand("verify", "run the consistency suite");
  std::string suite_name = "fast";
  verify->add_option("suite", suite_name, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? ok : usage_error;
  }

  try {
    const EvalConfig cfg = make_config(abs_opt, abs_tol, rel_opt, rel_tol, env_tol);

    if (eval->parsed()) {
      double arg = 0.0;
      if (eval_fn == "green_1d") {
        if (x_opt->count() == 0) throw UsageError("green_1d needs --x");
        arg = eval_x;
      } else if (eval_fn == "green_kd") {
        if (eval_p.opts.at("r")->count() == 0) throw UsageError("green_kd needs --r");
      } else {
        if (z_opt->count() == 0) throw UsageError(eval_fn + " needs --z");
        arg = eval_z;
      }
      EvalResult r;
      if (eval_fn == "green_kd") {
        eval_p.require({"beta", "n"}, eval_fn);
        r = green_kd(eval_p.r, eval_p.t, GreenSpec(eval_p.beta, eval_p.d, UnitVector(eval_p.n)), cfg);
      } else {
        r = make_function(eval_fn, eval_p, cfg)(arg);
      }
      out << "value " << format_double(r.value) << "\nabs_err " << format_double(r.abs_error_estimate)
          << "\nmethod " << to_string(r.method) << '\n';
      return ok;
    }

    if (table->parsed()) {
      const auto f = make_function(table_fn, table_p, cfg);
      const auto rows = tabulate(f, start, stop, count);
      write_file(table_out, csv_string(rows));
      return ok;
    }

    if (fig1->parsed()) {
      write_fig1(fig_dir, cfg);
      return ok;
    }

    const auto results = run_verification(suite_name == "full" ? Suite::full : Suite::fast);
    int failed = 0;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << format_double(r.measured)
          << " threshold=" << format_double(r.threshold) << "  " << r.detail << '\n';
      if (!r.passed) ++failed;
    }
    out << results.size() - failed << '/' << results.size() << " checks passed\n";
    return failed == 0 ? ok : verification_failed;
  } catch (const UsageError& e) {
    err << "fracgreen: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << "fracgreen: " << e.what() << '\n';
    return usage_error;
  } catch (const IoError& e) {
    err << "fracgreen: " << e.what() << '\n';
    return io_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "fracgreen: " << e.what() << '\n';
    return io_error;
  }
}

}  // namespace fracgreen::cli
