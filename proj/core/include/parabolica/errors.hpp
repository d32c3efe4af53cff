#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parabolica {

enum class ErrorCode {
  kZeroInput,
  kDegreeTooLow,
  kNotHomogeneous,
  kOddDegree,
  kUnlabelable,
  kSharedComponent,
  kSingularCurve,
  kTangentToInfinity,
  kTracingInconsistency,
  kFlatPoint,
  kRepeatedFactor,
  kDegenerate,
  kParse,
  kInvalidArgument,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

/// Every library failure carries a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax errors from the polynomial parser, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorCode::kParse, message + " at line " + std::to_string(line) +
                                     ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace parabolica
