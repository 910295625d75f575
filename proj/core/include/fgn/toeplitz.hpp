#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fgn/covariance.hpp"
#include "fgn/hurst.hpp"
#include "fgn/report.hpp"

namespace fgn {

/// Covariance matrix A of (D_2, ..., D_n): a symmetric Toeplitz matrix of
/// dimension n - 1 with entry(i, j) = rho_{|i-j|}. Only the first row is stored.
class SymToeplitz {
 public:
  SymToeplitz(HurstParam h, std::size_t n, std::vector<double> first_row);

  [[nodiscard]] HurstParam hurst() const noexcept { return h_; }
  /// Projection order n; the matrix is (n-1) x (n-1).
  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return first_row_.size(); }
  [[nodiscard]] std::span<const double> first_row() const noexcept { return first_row_; }
  /// Zero-based indices.
  [[nodiscard]] double entry(std::size_t i, std::size_t j) const {
    return first_row_[i > j ? i - j : j - i];
  }

 private:
  HurstParam h_;
  std::size_t n_;
  std::vector<double> first_row_;
};

/// Coefficients Gamma_n^2, ..., Gamma_n^n of E(D_1 | D_2, ..., D_n).
struct CoefficientRow {
  HurstParam hurst;
  std::size_t n = 0;
  std::vector<double> gammas;  // gammas[k - 2] == Gamma_n^k

  /// Gamma_n^k for 2 <= k <= n.
  [[nodiscard]] double gamma(std::size_t k) const { return gammas.at(k - 2); }
};

/// max over 2 <= l <= n of |rho_{l-1} - sum_k Gamma_n^k rho_{|l-k|}|.
/// rho must hold at least rho_0..rho_{n-1}.
[[nodiscard]] double system_residual(const CoefficientRow& row, std::span<const double> rho);

/// 1 - sum_k Gamma_n^k rho_{k-1}: the variance of D_1 - E(D_1 | D_2..D_n).
[[nodiscard]] double prediction_error_variance(const CoefficientRow& row,
                                               std::span<const double> rho);

/// Lower-triangular L with A = L L^T, stored packed by rows.
class LowerTriangular {
 public:
  explicit LowerTriangular(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {}

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  /// Requires j <= i.
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
    return data_[i * (i + 1) / 2 + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * (i + 1) / 2 + j]; }

  /// Row i, entries L(i, 0..i).
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * (i + 1) / 2, i + 1};
  }

  [[nodiscard]] double reconstruction_residual(const SymToeplitz& a) const;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Throws SingularRegime for H = 1 and InvalidArgument for n < 2.
[[nodiscard]] SymToeplitz build_matrix(HurstParam h, std::size_t n);

/// Solves the normal equations A Gamma = (rho_1, ..., rho_{n-1}) by Cholesky
/// factorization and two triangular solves. Valid for 0 <= H < 1.
[[nodiscard]] CoefficientRow solve_system(HurstParam h, std::size_t n);

inline constexpr std::size_t kMaxCramerOrder = 13;

/// Gamma_n^k = det(A_k) / det(A), with determinants by partial-pivot
/// elimination. Independent of the Cholesky route; 2 <= n <= 13.
[[nodiscard]] CoefficientRow solve_cramer(HurstParam h, std::size_t n);

/// Throws FactorizationFailure when a nonpositive pivot appears.
[[nodiscard]] LowerTriangular cholesky_factor(const SymToeplitz& a);

enum class DiagonalTrend { Constant, Nonincreasing, Nondecreasing, NonMonotone };

[[nodiscard]] std::string_view to_string(DiagonalTrend trend) noexcept;

/// Observed direction of L(i + d, i) in i, for each subdiagonal d = 1..dim-1.
/// Element d - 1 describes subdiagonal d.
[[nodiscard]] std::vector<DiagonalTrend> diagonal_trends(const LowerTriangular& l);

/// Three scans of the factor of an fGn covariance with 1/2 < H < 1:
/// (a) all entries nonnegative, (b) main diagonal nonincreasing,
/// (c) every subdiagonal nonincreasing. Violations are reported, never thrown.
[[nodiscard]] std::vector<PropertyReport> cholesky_conjecture_checks(const LowerTriangular& l);

}  // namespace fgn
