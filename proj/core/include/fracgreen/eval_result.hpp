#pragma once

#include <string_view>

namespace fracgreen {

enum class Method { series, closed_form, quadrature };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
  }
  return "unknown";
}

/// Scalar evaluation with its provenance. `effort` counts series terms or
/// quadrature nodes, depending on `method`.
struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int effort = 0;
  Method method = Method::series;
};

}  // namespace fracgreen
