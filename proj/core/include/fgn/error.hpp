#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgn {

enum class ErrorCode {
  InvalidHurst,
  InvalidArgument,
  NotApplicable,
  OrderTooHigh,
  OrderTooLarge,
  SingularRegime,
  FactorizationFailure,
  DegenerateDenominator,
  DomainError,
  DegenerateC0,
  IllConditioned,
  ChecksumMismatch,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fgn
