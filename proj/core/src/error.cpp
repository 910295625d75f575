#include "fgn/error.hpp"

namespace fgn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidHurst: return "InvalidHurst";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::SingularRegime: return "SingularRegime";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DegenerateC0: return "DegenerateC0";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
  }
  return "Unknown";
}

}  // namespace fgn
