#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace descent {

enum class ErrorCode {
  DivisionByZero,
  PoleAtPoint,
  InseparableInput,
  FactorizationTooHard,
  ModulusMismatch,
  SingularCurve,
  UnsupportedN,
  BadCharacteristic,
  JUndefined,
  PointNotOnCurve,
  VerticalSlope,
  CurveMismatch,
  NotTorsion,
  SingularSpecialization,
  PoleInCoefficients,
  ZeroInput,
  SearchExhausted,
  ConditionViolated,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::InseparableInput: return "InseparableInput";
    case ErrorCode::FactorizationTooHard: return "FactorizationTooHard";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::JUndefined: return "JUndefined";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::VerticalSlope: return "VerticalSlope";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::SingularSpecialization: return "SingularSpecialization";
    case ErrorCode::PoleInCoefficients: return "PoleInCoefficients";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the condition, `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace descent
