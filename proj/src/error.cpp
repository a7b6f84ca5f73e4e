#include "gklab/error.hpp"

namespace gklab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_degree: return "invalid-degree";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::invalid_grid: return "invalid-grid";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::function_domain: return "function-domain";
    case ErrorCode::quadrature_failure: return "quadrature-failure";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::insufficient_data: return "insufficient-data";
    case ErrorCode::unknown_function: return "unknown-function";
    case ErrorCode::envelope_degenerate: return "envelope-degenerate";
    case ErrorCode::validation: return "validation";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace gklab
