#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace it2mabac {

enum class ErrorCode {
  EndpointOrderViolation,
  HeightOutOfRange,
  HeightOrderViolation,
  NegativeScalar,
  NegativeOperand,
  UnknownTerm,
  DimensionMismatch,
  TooFewValues,
  EmptyInput,
  ZeroHeight,
  DegenerateRange,
  SyntaxError,
  InvalidParams,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception. The message is
/// prefixed with the error code name; callers that need to branch use code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Validation failures (bad input) versus computation failures. The CLI maps
/// these to exit codes 1 and 2.
bool is_validation_error(ErrorCode code);

}  // namespace it2mabac
