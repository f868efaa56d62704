#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  ZeroPolynomial,
  ZeroForm,
  ZeroPoint,
  DegreeMismatch,
  NotSplitOverQ,
  LengthTooLarge,
  InvalidCenter,
  DegenerateMap,
  RankDeficientCombo,
  RepeatedParams,
  UnsupportedTheorem,
  ParameterOutOfRange,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

// Single exception type for the library; the C API maps `code()` onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apolar
