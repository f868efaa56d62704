#include "apolar/error.hpp"

namespace apolar {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotSplitOverQ: return "NotSplitOverQ";
    case ErrorCode::LengthTooLarge: return "LengthTooLarge";
    case ErrorCode::InvalidCenter: return "InvalidCenter";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::RankDeficientCombo: return "RankDeficientCombo";
    case ErrorCode::RepeatedParams: return "RepeatedParams";
    case ErrorCode::UnsupportedTheorem: return "UnsupportedTheorem";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace apolar
