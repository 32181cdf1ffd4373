#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eamod {

enum class ErrorCode {
  NonPrime,
  DegreeOutOfRange,
  NotNilpotent,
  UnequalTotals,
  NonCommuting,
  ZeroPoint,
  MismatchedContext,
  DependentGenerators,
  SingularBasis,
  TooLarge,
  DuplicateDirection,
  BadParams,
  ParseFailure,
  WriteFailure,
  FormatError,
  DimensionMismatch,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Grammar failure with the offending character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }
  /// Message without the code and position prefix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace eamod
