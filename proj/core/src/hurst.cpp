#include "fgn/hurst.hpp"

#include <cmath>
#include <string>

#include "fgn/error.hpp"

namespace fgn {

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::Zero: return "zero";
    case Regime::ShortRange: return "short_range";
    case Regime::Independent: return "independent";
    case Regime::LongRange: return "long_range";
    case Regime::Degenerate: return "degenerate";
  }
  return "unknown";
}

HurstParam::HurstParam(double h) : h_(h) {
  if (!std::isfinite(h) || h < 0.0 || h > 1.0) {
    throw Error(ErrorCode::InvalidHurst, "Hurst index must lie in [0, 1], got " + std::to_string(h));
  }
}

Regime HurstParam::regime() const noexcept {
  if (h_ == 0.0) return Regime::Zero;
  if (h_ < 0.5) return Regime::ShortRange;
  if (h_ == 0.5) return Regime::Independent;
  if (h_ < 1.0) return Regime::LongRange;
  return Regime::Degenerate;
}

}  // namespace fgn
