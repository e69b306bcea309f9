#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liesc {

enum class ErrorCode {
  DomainMismatch,
  DivisionByZero,
  InvalidDomain,
  InvalidScalar,
  AmbientMismatch,
  NotContained,
  NotASubalgebra,
  NotNilpotent,
  JacobiViolation,
  InfiniteDomain,
  ZeroAlgebra,
  TooLarge,
  IdentificationNotCentral,
  NotInvertible,
  NotFrattinian,
  AbelianInput,
  InternalAssertionFailed,
  MalformedCertificate,
  ParseError,
  IndexOutOfRange,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidScalar: return "InvalidScalar";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::InfiniteDomain: return "InfiniteDomain";
    case ErrorCode::ZeroAlgebra: return "ZeroAlgebra";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IdentificationNotCentral: return "IdentificationNotCentral";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotFrattinian: return "NotFrattinian";
    case ErrorCode::AbelianInput: return "AbelianInput";
    case ErrorCode::InternalAssertionFailed: return "InternalAssertionFailed";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when structure constants break the Jacobi identity; the triple is 1-based.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, const std::string& message)
      : Error(ErrorCode::JacobiViolation, message), triple_(triple) {}

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

}  // namespace liesc
