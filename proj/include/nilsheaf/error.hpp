#pragma once

#include <stdexcept>
#include <string>

namespace nilsheaf {

enum class ErrorCode {
  NotSorted,
  NotAnEpsilonPartition,
  IndexOutOfRange,
  NotApplicable,
  NotAdmissibleAt,
  DegenerateTarget,
  InvalidResult,
  GeneratorNotInFormGroup,
  OracleTooLarge,
  UnknownOrbit,
  InternalError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::NotAnEpsilonPartition: return "NotAnEpsilonPartition";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotAdmissibleAt: return "NotAdmissibleAt";
    case ErrorCode::DegenerateTarget: return "DegenerateTarget";
    case ErrorCode::InvalidResult: return "InvalidResult";
    case ErrorCode::GeneratorNotInFormGroup: return "GeneratorNotInFormGroup";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::UnknownOrbit: return "UnknownOrbit";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "?";
}

// Every failure raised by the library. `detail` carries the offending part,
// index or position when one exists (0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, long detail, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  long detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  long detail_;
};

}  // namespace nilsheaf
