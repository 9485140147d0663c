#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace mlv {

enum class ErrorCode {
  DivisionByZero,
  NotInvertible,
  ShapeMismatch,
  PairingDegenerate,
  PlaceMismatch,
  BudgetExceeded,
  Inconsistent,
  ValidationFailed,
  DualityDegenerate,
  MalformedHodgeNumbers,
  MissingRanks,
  NotATriangle,
  UnknownDatum,
  ParseError,
  InvalidInput,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlv
