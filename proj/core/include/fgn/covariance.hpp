#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fgn/hurst.hpp"
#include "fgn/report.hpp"

namespace fgn {

/// Autocovariances rho_0, ..., rho_m of unit-variance fractional Gaussian
/// noise. values.front() == 1 exactly.
struct AutocovSeq {
  HurstParam hurst;
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double operator[](std::size_t k) const { return values[k]; }
  [[nodiscard]] std::span<const double> view() const noexcept { return values; }
};

/// rho_k = E[D_1 D_{k+1}] = (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2, rho_0 = 1.
[[nodiscard]] double rho(HurstParam h, std::size_t k);

/// Continuous extension rho(H, x) for x >= 0, with |0|^{2H} taken as 0.
/// Agrees bit-for-bit with rho() at integer arguments k >= 1.
///
/// For x >= 2 the second difference is summed as the same-sign series
/// x^{2H}/2 * sum_j c_j x^{-(2j+2)}, which avoids the cancellation of the
/// literal formula (relative error ~1e-15 instead of ~k^2 * eps).
[[nodiscard]] double rho_cont(HurstParam h, double x);

[[nodiscard]] AutocovSeq autocov_seq(HurstParam h, std::size_t m);

/// rho_2 - rho_1^2 == (rho_1 - rho_3) / 2; holds iff the residual is <= tol.
[[nodiscard]] PropertyReport check_identity_r1r2r3(HurstParam h, double tol);

/// Monotonicity/positivity, convexity and log-convexity scans over
/// rho_0..rho_m, plus rho_1^2 < rho_3.
///
/// For H > 1/2 all comparisons start at k = 1. For H < 1/2 the first two
/// are reversed (negative, increasing, concave) and, like log-convexity,
/// scanned from k = 2 since rho_0 = 1 is not part of the negative tail.
/// Throws NotApplicable for H in {0, 1/2, 1} and InvalidArgument for m < 3.
[[nodiscard]] std::vector<PropertyReport> check_rho_properties(HurstParam h, std::size_t m);

inline constexpr std::size_t kDefaultCmOrder = 8;
inline constexpr std::size_t kMaxCmOrder = 12;

/// Discrete complete monotonicity of k -> rho_k, k >= 1:
/// (-1)^j (Delta^j rho)_k >= -2^j * 1e-12 for 0 <= j <= max_order and
/// 1 <= k <= m - j. For H < 1/2 the sequence -rho is checked instead.
/// Throws OrderTooHigh for max_order > 12, InvalidArgument for m < max_order + 2
/// and NotApplicable for H in {0, 1}.
[[nodiscard]] PropertyReport check_complete_monotonicity(HurstParam h, std::size_t max_order,
                                                         std::size_t m);

}  // namespace fgn
