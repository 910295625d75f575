#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fgn/hurst.hpp"
#include "fgn/report.hpp"

namespace fgn {

// Conjecture scans over a Hurst grid. Every grid value must lie in (1/2, 1)
// (DomainError otherwise) and n_max >= 2. Rows come from coeff_triangle.

/// Gamma_n^k > 0 for all 2 <= k <= n <= n_max.
[[nodiscard]] ConjectureReport verify_positivity(std::span<const double> h_grid, std::size_t n_max);

/// Gamma_n^2 > Gamma_n^k for all 3 <= k <= n.
[[nodiscard]] ConjectureReport verify_first_largest(std::span<const double> h_grid,
                                                    std::size_t n_max);

/// Gamma_n^k > Gamma_{n+1}^k down every column.
[[nodiscard]] ConjectureReport verify_column_monotonicity(std::span<const double> h_grid,
                                                          std::size_t n_max);

/// Descriptive: one counterexample (h, n, k, Gamma_n^k - Gamma_n^{k-1}) per
/// row that is not strictly decreasing in k, at its first increase.
/// holds == true means every row decreases.
[[nodiscard]] ConjectureReport verify_row_nonmonotonicity(std::span<const double> h_grid,
                                                          std::size_t n_max);

/// rho_2 + rho_2^2 - rho_1^2 - rho_1 rho_3 > 0, equivalent to Gamma_4^3 > 0.
[[nodiscard]] PropertyReport check_posit2(HurstParam h);

/// psi(H, x) = (rho(x) + rho(x+2)) / rho(x+1) on 0 <= x <= 1, using the
/// |1-x|^{2H} branch. Requires 1/2 < H < 1.
[[nodiscard]] double psi(HurstParam h, double x);

/// psi for x >= 1 in the form -2 + eta(H, 1/(x+1)).
[[nodiscard]] double psi_tail(HurstParam h, double x);

/// eta(H, y) = ((1+2y)^{2H} + (1-2y)^{2H} - 2) / ((1+y)^{2H} + (1-y)^{2H} - 2)
/// for 0 < y <= 1/2 and 1/2 < H <= 1. Small y is summed as the ratio of the
/// two power series in y^2, which stays accurate as y -> 0 (eta -> 4).
[[nodiscard]] double eta(HurstParam h, double y);

/// c_0..c_{k_max} with (1+y)^{2H} + (1-y)^{2H} - 2 = sum c_k y^{2k+2},
/// c_k = 2 (2H)_{2k+2} / (2k+2)! (falling factorial), by product recurrence.
[[nodiscard]] std::vector<double> eta_c_coeffs(HurstParam h, std::size_t k_max);

/// b_0..b_{k_max} with eta(H, y) = sum b_k y^{2k}, by forward substitution in
/// 2^{2k+2} c_k = sum_{l<=k} c_l b_{k-l}. Throws DegenerateC0 when |c_0| < 1e-300.
[[nodiscard]] std::vector<double> eta_b_coeffs(HurstParam h, std::size_t k_max);

/// b_k > 0 for 0 <= k <= k_max over the grid. Counterexamples use n = 0.
/// The note records max |b_k| as a growth diagnostic.
[[nodiscard]] ConjectureReport check_b_positivity(std::span<const double> h_grid,
                                                  std::size_t k_max);

/// Grid point of [0, 1] (points uniform samples, endpoints included) where psi is largest.
[[nodiscard]] double psi_argmax(HurstParam h, std::size_t points = 101);

/// count uniformly spaced values from lo to hi inclusive.
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

}  // namespace fgn
