#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  mixed_algebra,
  rank_mismatch,
  not_divisible,
  not_liftable,
  not_pseudo_inverse,
  irregular_denominator,
  koszul_unsatisfied,
  not_in_tangent_module,
  not_expandable,
};

/// Exception carrying a stable error code; the C API maps codes 1:1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ncg
