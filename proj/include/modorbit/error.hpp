#pragma once

#include <stdexcept>
#include <string>

namespace modorbit {

enum class ErrorCode {
  NonSquareFreeN,
  ZeroDenominator,
  NotInSet,
  Overflow,
  InternalInvariantBroken,
  RelationViolation,
  OutOfRange,
  NonIntegralSum,
  CycleGroupingFailure,
  AlreadyInH,
  ParseError,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquareFreeN: return "NonSquareFreeN";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotInSet: return "NotInSet";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonIntegralSum: return "NonIntegralSum";
    case ErrorCode::CycleGroupingFailure: return "CycleGroupingFailure";
    case ErrorCode::AlreadyInH: return "AlreadyInH";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modorbit
