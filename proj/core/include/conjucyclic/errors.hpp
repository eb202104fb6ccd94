#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conjucyclic {

enum class ErrorCode {
  not_prime,
  too_large,
  no_primitive_polynomial,
  invalid_modulus,
  invalid_argument,
  division_by_zero_polynomial,
  zero_constant_term,
  length_mismatch,
  odd_length,
  not_a_divisor,
  wrong_characteristic,
  budget_exceeded,
  zero_code,
  not_dual_containing,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that front ends can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conjucyclic
