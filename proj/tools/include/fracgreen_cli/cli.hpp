#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <vector>

#include "fracgreen/wright_quadrature.hpp"
#include "fracgreen_cli/csv.hpp"

namespace fracgreen::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, io_error = 3 };

/// Entry point shared by the executable and the tests. `env_tol` is the
/// value of FRACGREEN_TOL, or nullptr when unset.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_tol);

/// Evaluates f at `count` evenly spaced points of [start, stop], split over
/// worker threads; row order follows the grid regardless of scheduling.
std::vector<Row> tabulate(const std::function<EvalResult(double)>& f, double start, double stop,
                          int count, unsigned threads = 0);

/// The four integral Wright curves (beta = 1/4, 1/3, 1/2, 2/3) on z in
/// [0, 5] with 201 points, one CSV each, plus README.txt. Returns the CSV
/// paths in beta order. Throws std::filesystem::filesystem_error or
/// std::ios_base::failure on I/O problems.
std::vector<std::filesystem::path> write_fig1(const std::filesystem::path& dir, const EvalConfig& cfg = {});

}  // namespace fracgreen::cli
