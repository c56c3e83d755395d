#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwf {

enum class ErrorCode {
  HeightOfZero,
  DivisionByZero,
  NegativeCoefficient,
  ZeroForm,
  ZeroDeterminant,
  PoleAtInput,
  NoParent,
  NotComparable,
  ZeroRemainder,
  UndefinedPart,
  InvalidRoot,
  NotDeterminantOne,
  NonPositive,
  IndexOutOfRange,
  NoSuccessor,
  DepthCapExceeded,
  InvalidRule,
  ParseError,
};

/// Stable name of an error code, e.g. "NoParent". Used verbatim in CLI messages.
std::string_view error_name(ErrorCode code) noexcept;

/// The single exception type thrown by the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cwf
