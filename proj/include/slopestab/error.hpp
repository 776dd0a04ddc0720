#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slopestab {

enum class ErrorCode {
  DivisionByZero,
  DegenerateInequality,
  SurfaceMismatch,
  ParamError,
  NotAmplePolarization,
  DegeneratePolarization,
  DegenerateQuotientSlope,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateInequality: return "DegenerateInequality";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::ParamError: return "ParamError";
    case ErrorCode::NotAmplePolarization: return "NotAmplePolarization";
    case ErrorCode::DegeneratePolarization: return "DegeneratePolarization";
    case ErrorCode::DegenerateQuotientSlope: return "DegenerateQuotientSlope";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace slopestab
