#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padic {

enum class ErrorCode {
  NotPrime,
  Parse,
  ZeroPolynomial,
  ConstantPolynomial,
  ZeroConstantTerm,
  EmptyInput,
  PrimeMismatch,
  SpanMismatch,
  NotPrPure,
  HypothesisViolation,
  NotDumas,
  DegreeCapExceeded,
  EmptySpec,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. `code()` identifies the
/// failure without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  /// Zero-based byte offset into the input where parsing failed.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace padic
