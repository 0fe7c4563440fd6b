#include "it2mabac/error.hpp"

namespace it2mabac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EndpointOrderViolation: return "EndpointOrderViolation";
    case ErrorCode::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorCode::HeightOrderViolation: return "HeightOrderViolation";
    case ErrorCode::NegativeScalar: return "NegativeScalar";
    case ErrorCode::NegativeOperand: return "NegativeOperand";
    case ErrorCode::UnknownTerm: return "UnknownTerm";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooFewValues: return "TooFewValues";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroHeight: return "ZeroHeight";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::EndpointOrderViolation:
    case ErrorCode::HeightOutOfRange:
    case ErrorCode::HeightOrderViolation:
    case ErrorCode::UnknownTerm:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidParams:
      return true;
    default:
      return false;
  }
}

}  // namespace it2mabac
