#include "padic/error.hpp"

namespace padic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::SpanMismatch: return "SpanMismatch";
    case ErrorCode::NotPrPure: return "NotPrPure";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NotDumas: return "NotDumas";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::Parse, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace padic
