#include "conjucyclic/errors.hpp"

namespace conjucyclic {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::no_primitive_polynomial: return "NoPrimitivePolynomialFound";
    case ErrorCode::invalid_modulus: return "InvalidModulus";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::division_by_zero_polynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::zero_constant_term: return "ZeroConstantTerm";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::odd_length: return "OddLength";
    case ErrorCode::not_a_divisor: return "NotADivisor";
    case ErrorCode::wrong_characteristic: return "WrongCharacteristic";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::zero_code: return "ZeroCode";
    case ErrorCode::not_dual_containing: return "NotDualContaining";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace conjucyclic
