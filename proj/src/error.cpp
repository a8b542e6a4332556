#include "rwalk/error.hpp"

namespace rwalk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::BadBand: return "BadBand";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SymmetricUnsupported: return "SymmetricUnsupported";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
  }
  return "Unknown";
}

}  // namespace rwalk
