#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fgn/hurst.hpp"
#include "fgn/toeplitz.hpp"

namespace fgn {

/// Identifier of the random stream used by simulate_fgn. Data are reproducible
/// for a fixed identifier; a new generator gets a new identifier.
inline constexpr std::string_view kGeneratorId = "splitmix64-counter/1";

/// Simulated increments, one path per row.
struct SamplePaths {
  HurstParam hurst;
  std::size_t n = 0;
  std::size_t paths = 0;
  std::uint64_t seed = 0;
  std::string_view generator = kGeneratorId;
  std::vector<double> data;  // paths x n, row-major

  [[nodiscard]] std::span<const double> path(std::size_t p) const {
    return {data.data() + p * n, n};
  }
};

/// Uniform variate in (0, 1) number `counter` of the stream keyed by `seed`.
/// Stateless, so any path can be regenerated on its own.
[[nodiscard]] double uniform_at(std::uint64_t seed, std::uint64_t counter) noexcept;

/// paths draws of (D_1, ..., D_n) = L z with z standard normal (inverse CDF)
/// and L the Cholesky factor of the n x n fGn covariance.
/// Requires H < 1, n >= 2 and paths >= 1. Bit-identical for equal inputs.
[[nodiscard]] SamplePaths simulate_fgn(HurstParam h, std::size_t n, std::size_t paths,
                                       std::uint64_t seed);

struct OlsEstimate {
  CoefficientRow coefficients;
  std::vector<double> standard_errors;  // same indexing as coefficients.gammas
  double residual_variance = 0.0;
};

/// Least squares of D_1 on (D_2, ..., D_n) without intercept.
/// Requires paths >= 10 n; throws IllConditioned when a pivot of the scaled
/// Gram matrix falls below 1e-10.
[[nodiscard]] OlsEstimate fit_ols(const SamplePaths& samples);

[[nodiscard]] CoefficientRow estimate_coeffs_ols(const SamplePaths& samples);

/// Sample second moments (1/paths) sum_p D_i D_j, n x n row-major. The mean is
/// known to be zero and is not subtracted.
[[nodiscard]] std::vector<double> empirical_covariance(const SamplePaths& samples);

inline constexpr double kMinGramPivot = 1e-10;

}  // namespace fgn
