#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracgreen {

enum class ErrorKind {
  InvalidArgument,
  NonConvergence,
  ToleranceNotMet,
  NonFiniteIntegrand,
  NonFiniteResult,
  InvalidTime,
  DimensionMismatch,
  InvalidDirection,
  InvalidLaplaceVariable,
  KinkPoint,
  OrderOutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind is stable API;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the series when the truncation criterion is not met within the
/// term cap, or when cancellation makes the partial sum untrustworthy.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double partial_sum, int terms)
      : Error(ErrorKind::NonConvergence, what), partial_sum_(partial_sum), terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  int terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  int terms_;
};

/// Quadrature could not reach the requested tolerance; the best estimate is
/// carried along so callers can decide whether it is good enough.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& what, double best_estimate, double error_estimate)
      : Error(ErrorKind::ToleranceNotMet, what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace fracgreen
