#pragma once

#include <array>
#include <cstddef>

#include "fgn/hurst.hpp"
#include "fgn/toeplitz.hpp"

namespace fgn {

/// (Gamma_3^2, Gamma_3^3) = (rho_1(1-rho_2), rho_2 - rho_1^2) / (1 - rho_1^2).
[[nodiscard]] std::array<double, 2> gamma3(HurstParam h);

/// (Gamma_4^2, Gamma_4^3, Gamma_4^4). The denominator is evaluated in the
/// factored form (1-rho_2)(1+rho_2-2rho_1^2) and Gamma_4^3 through
/// (1-rho_2)(rho_2+rho_2^2-rho_1^2-rho_1 rho_3) with the common factor cancelled.
[[nodiscard]] std::array<double, 3> gamma4(HurstParam h);

/// gamma4 from the fully expanded cubic numerators and denominator; kept as
/// a cross-check of the factored evaluation.
[[nodiscard]] std::array<double, 3> gamma4_expanded(HurstParam h);

/// Limits of (Gamma_3^2, Gamma_3^3) as H -> 1, from their logarithmic closed forms.
[[nodiscard]] std::array<double, 2> limits_n3();

/// Limits of (Gamma_4^2, Gamma_4^3, Gamma_4^4) as H -> 1.
[[nodiscard]] std::array<double, 3> limits_n4();

/// Exact row at H = 0, where rho = (1, -1/2, 0, 0, ...):
/// Gamma_n^k = -(n - k + 1) / n.
[[nodiscard]] CoefficientRow gamma_h_zero(std::size_t n);

/// Exact row at H = 1/2 (independent increments): all zeros.
[[nodiscard]] CoefficientRow gamma_h_half(std::size_t n);

/// The H in (1/2, 1) where Gamma_4^3 = Gamma_4^4, located by bisection on
/// [lo, hi]. Throws DomainError if the difference does not change sign.
[[nodiscard]] double gamma4_crossing(double lo = 0.51, double hi = 0.99, double tol = 1e-12);

}  // namespace fgn
