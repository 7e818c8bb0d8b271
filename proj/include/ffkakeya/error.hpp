#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffkakeya {

enum class ErrorCode {
  NonPrime,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  DivisionByZero,
  MixedFields,
  ArityMismatch,
  ZeroPolynomial,
  BadEll,
  EllOutOfRange,
  NotMultipleOfQ,
  SizeGuard,
  SearchSpaceTooLarge,
  DimensionMismatch,
  PreconditionFailed,
  InvalidArgument,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace ffkakeya
