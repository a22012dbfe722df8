#pragma once

#include <stdexcept>
#include <string>

namespace mg {

// Numeric values are shared with the C API (mg_status) and the CLI exit codes.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  ParseError = 2,
  QueryOutsidePolygon = 3,
  SpecMismatch = 4,
  BitBlowup = 5,
  VerificationFailed = 6,
  NotSimple = 7,
  SegmentOutsidePolygon = 8,
  SourceOnMirrorLine = 9,
  BudgetExceeded = 10,
  TooLarge = 11,
  GraphDisconnected = 12,
  CoverageCertificationFailed = 13,
  NotAFunnel = 14,
  NotWeaklyVisible = 15,
  InvalidInstance = 16,
  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mg
