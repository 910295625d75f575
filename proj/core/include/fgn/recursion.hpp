#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fgn/hurst.hpp"
#include "fgn/toeplitz.hpp"

namespace fgn {

/// All rows Gamma_m^k, 2 <= k <= m <= n_max, stored packed (row m has m - 1
/// entries). Immutable once built.
class CoefficientTriangle {
 public:
  [[nodiscard]] HurstParam hurst() const noexcept { return h_; }
  [[nodiscard]] std::size_t n_max() const noexcept { return n_max_; }

  /// Gamma_m^2, ..., Gamma_m^m for 2 <= m <= n_max.
  [[nodiscard]] std::span<const double> row(std::size_t m) const;
  [[nodiscard]] double gamma(std::size_t m, std::size_t k) const { return row(m)[k - 2]; }
  [[nodiscard]] CoefficientRow to_row(std::size_t m) const;

  /// Multiply-add and division count spent building the triangle.
  [[nodiscard]] std::uint64_t op_count() const noexcept { return ops_; }

 private:
  friend CoefficientTriangle coeff_triangle(HurstParam h, std::size_t n_max);

  CoefficientTriangle(HurstParam h, std::size_t n_max);

  HurstParam h_;
  std::size_t n_max_;
  std::vector<double> data_;
  std::uint64_t ops_ = 0;
};

/// Builds the triangle by the order-update recurrence
///
///   Gamma_{n+1}^{n+1} = (rho_n - sum_k Gamma_n^k rho_{n+1-k}) / (1 - sum_k Gamma_n^k rho_{k-1})
///   Gamma_{n+1}^k     = Gamma_n^k - Gamma_{n+1}^{n+1} Gamma_n^{n-k+2},
///
/// seeded with Gamma_2^2 = rho_1. O(n_max^2) work.
/// Throws SingularRegime for H = 1 and DegenerateDenominator when the
/// prediction-error variance drops to 1e-14 or below.
[[nodiscard]] CoefficientTriangle coeff_triangle(HurstParam h, std::size_t n_max);

/// Same values as coeff_triangle(h, n).to_row(n), keeping only two rows alive.
[[nodiscard]] CoefficientRow last_row(HurstParam h, std::size_t n);

inline constexpr double kMinPredictionVariance = 1e-14;

}  // namespace fgn
