#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nonext {

enum class ErrorCode {
  EmptyInput,
  NegativeEntry,
  NonFinite,
  NotNormalized,
  ZeroSum,
  ZeroMarginal,
  IndexOutOfRange,
  InvalidTable,
  OutOfTableRange,
  InvalidParameter,
  NonPositiveK,
  FamilyInvalid,
  PhiVanishes,
  ZeroWithNonpositiveExponent,
  DomainError,
  NegativeEntropy,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nonext
