#pragma once

#include <string_view>

namespace fgn {

enum class Regime {
  Zero,         // H = 0
  ShortRange,   // 0 < H < 1/2
  Independent,  // H = 1/2
  LongRange,    // 1/2 < H < 1
  Degenerate,   // H = 1
};

[[nodiscard]] std::string_view to_string(Regime regime) noexcept;

/// Hurst index on the closed interval [0, 1].
///
/// The endpoints are accepted on purpose: H = 0 and H = 1/2 have exact
/// coefficient solutions and H = 1 is the degenerate all-ones covariance,
/// so each is a useful test point. Operations that cannot handle a regime
/// reject it themselves.
class HurstParam {
 public:
  /// Throws Error(InvalidHurst) for non-finite values or values outside [0, 1].
  explicit HurstParam(double h);

  [[nodiscard]] double value() const noexcept { return h_; }
  [[nodiscard]] double two_h() const noexcept { return 2.0 * h_; }
  [[nodiscard]] Regime regime() const noexcept;

  friend bool operator==(HurstParam, HurstParam) = default;

 private:
  double h_;
};

}  // namespace fgn
