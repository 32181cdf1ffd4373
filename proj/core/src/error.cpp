#include "eamod/error.hpp"

namespace eamod {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::UnequalTotals: return "UnequalTotals";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::MismatchedContext: return "MismatchedContext";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DuplicateDirection: return "DuplicateDirection";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseFailure: return "ParseFailure";
    case ErrorCode::WriteFailure: return "WriteFailure";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::ParseFailure, "at position " + std::to_string(position) + ": " + what),
      position_(position),
      reason_(what) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace eamod
