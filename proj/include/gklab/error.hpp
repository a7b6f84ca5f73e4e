#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gklab {

enum class ErrorCode {
  invalid_degree,
  index_out_of_range,
  invalid_grid,
  invalid_argument,
  domain,
  function_domain,
  quadrature_failure,
  divergence,
  insufficient_data,
  unknown_function,
  envelope_degenerate,
  validation,
  usage,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the experiment runner in particular) can decide whether to abort
/// or record the failure against a single row.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gklab
