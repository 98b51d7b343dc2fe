#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectra {

// Values mirror spectra_status in spectra.h; keep the two in sync.
enum class ErrorCode : int {
  Ok = 0,
  NotClosed = 1,
  NoIdentity = 2,
  NotAssociative = 3,
  NotLatin = 4,
  IncompatibleOrder = 5,
  MalformedVector = 6,
  InvalidInvariants = 7,
  NotNormal = 8,
  NotAbelian = 9,
  NotNilpotent = 10,
  NotClass2 = 11,
  OrderOverflow = 12,
  UnknownName = 13,
  ParamOutOfRange = 14,
  CapExceeded = 15,
  BudgetExceeded = 16,
  EmptyFamily = 17,
  ParseError = 18,
  InvalidArgument = 19,
  Internal = 99,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

}  // namespace spectra
