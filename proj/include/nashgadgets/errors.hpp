#pragma once

#include <stdexcept>
#include <string>

namespace nashgadgets {

enum class ErrorCode {
  kMixedRadicands,
  kDivideByZero,
  kShapeMismatch,
  kSyntaxError,
  kIndexOutOfRange,
  kBadParameter,
  kBadPlayerCount,
  kNotASolution,
  kEmptyCoalition,
  kBudgetExceeded,
  kUnknownProblemId,
  kBadVariantSource,
  kUndecided,
};

const char* error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI, bindings) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures remember the 1-based line they came from.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& what)
      : Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace nashgadgets
