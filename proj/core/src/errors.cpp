#include "fracgreen/errors.hpp"

namespace fracgreen {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::NonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorKind::NonFiniteResult: return "NonFiniteResult";
    case ErrorKind::InvalidTime: return "InvalidTime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidDirection: return "InvalidDirection";
    case ErrorKind::InvalidLaplaceVariable: return "InvalidLaplaceVariable";
    case ErrorKind::KinkPoint: return "KinkPoint";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fracgreen
