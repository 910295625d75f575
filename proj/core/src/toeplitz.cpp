#include "fgn/toeplitz.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dense.hpp"
#include "fgn/error.hpp"
#include "slack_tracker.hpp"

namespace fgn {
namespace {

void require_order(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "projection order n must be >= 2");
}

void require_nonsingular(HurstParam h) {
  if (h.regime() == Regime::Degenerate) {
    throw Error(ErrorCode::SingularRegime, "H = 1 gives the singular all-ones covariance");
  }
}

// Determinant by Gaussian elimination with partial pivoting; m is d x d row-major.
double determinant(std::vector<double> m, std::size_t d) {
  double det = 1.0;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r) {
      if (std::abs(m[r * d + col]) > std::abs(m[pivot * d + col])) pivot = r;
    }
    const double p = m[pivot * d + col];
    if (p == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < d; ++c) std::swap(m[pivot * d + c], m[col * d + c]);
      det = -det;
    }
    det *= p;
    for (std::size_t r = col + 1; r < d; ++r) {
      const double factor = m[r * d + col] / p;
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < d; ++c) m[r * d + c] -= factor * m[col * d + c];
    }
  }
  return det;
}

}  // namespace

SymToeplitz::SymToeplitz(HurstParam h, std::size_t n, std::vector<double> first_row)
    : h_(h), n_(n), first_row_(std::move(first_row)) {
  if (first_row_.size() + 1 != n_ || first_row_.empty() || first_row_.front() != 1.0) {
    throw Error(ErrorCode::InvalidArgument, "first row must be rho_0..rho_{n-2} with rho_0 = 1");
  }
}

double system_residual(const CoefficientRow& row, std::span<const double> rho) {
  const std::size_t n = row.n;
  if (rho.size() < n) throw Error(ErrorCode::InvalidArgument, "need rho_0..rho_{n-1}");
  double worst = 0.0;
  for (std::size_t l = 2; l <= n; ++l) {
    double sum = 0.0;
    for (std::size_t k = 2; k <= n; ++k) sum += row.gammas[k - 2] * rho[l > k ? l - k : k - l];
    worst = std::max(worst, std::abs(rho[l - 1] - sum));
  }
  return worst;
}

double prediction_error_variance(const CoefficientRow& row, std::span<const double> rho) {
  if (rho.size() < row.n) throw Error(ErrorCode::InvalidArgument, "need rho_0..rho_{n-1}");
  double sum = 0.0;
  for (std::size_t k = 2; k <= row.n; ++k) sum += row.gammas[k - 2] * rho[k - 1];
  return 1.0 - sum;
}

double LowerTriangular::reconstruction_residual(const SymToeplitz& a) const {
  if (a.dim() != dim_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto ri = row(i);
    for (std::size_t j = 0; j <= i; ++j) {
      const auto rj = row(j);
      double s = 0.0;
      for (std::size_t p = 0; p <= j; ++p) s += ri[p] * rj[p];
      worst = std::max(worst, std::abs(a.entry(i, j) - s));
    }
  }
  return worst;
}

SymToeplitz build_matrix(HurstParam h, std::size_t n) {
  require_order(n);
  require_nonsingular(h);
  AutocovSeq seq = autocov_seq(h, n - 2);
  return SymToeplitz(h, n, std::move(seq.values));
}

CoefficientRow solve_system(HurstParam h, std::size_t n) {
  require_order(n);
  require_nonsingular(h);
  const AutocovSeq seq = autocov_seq(h, n - 1);
  const std::size_t d = n - 1;

  const Eigen::MatrixXd a = detail::dense_toeplitz(std::span(seq.values).first(d));
  const Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::FactorizationFailure,
                "nonpositive pivot for H=" + std::to_string(h.value()) + ", n=" + std::to_string(n));
  }
  const Eigen::Map<const Eigen::VectorXd> rhs(seq.values.data() + 1, static_cast<Eigen::Index>(d));
  const Eigen::VectorXd x = llt.solve(rhs);
  return CoefficientRow{h, n, std::vector<double>(x.data(), x.data() + x.size())};
}

CoefficientRow solve_cramer(HurstParam h, std::size_t n) {
  require_order(n);
  if (n > kMaxCramerOrder) {
    throw Error(ErrorCode::OrderTooLarge, "Cramer's rule is limited to n <= 13");
  }
  require_nonsingular(h);
  const AutocovSeq seq = autocov_seq(h, n - 1);
  const std::size_t d = n - 1;

  std::vector<double> a(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i * d + j] = seq[i > j ? i - j : j - i];
  const double det_a = determinant(a, d);

  CoefficientRow row{h, n, std::vector<double>(d)};
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<double> ak = a;
    for (std::size_t i = 0; i < d; ++i) ak[i * d + col] = seq[i + 1];
    row.gammas[col] = determinant(std::move(ak), d) / det_a;
  }
  return row;
}

LowerTriangular cholesky_factor(const SymToeplitz& a) {
  require_nonsingular(a.hurst());
  const std::size_t d = a.dim();
  const Eigen::LLT<Eigen::MatrixXd> llt(detail::dense_toeplitz(a.first_row()));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::FactorizationFailure,
                "nonpositive pivot for H=" + std::to_string(a.hurst().value()) +
                    ", dim=" + std::to_string(d));
  }
  const Eigen::MatrixXd l = llt.matrixL();
  LowerTriangular out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out(i, j) = l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

std::string_view to_string(DiagonalTrend trend) noexcept {
  switch (trend) {
    case DiagonalTrend::Constant: return "constant";
    case DiagonalTrend::Nonincreasing: return "nonincreasing";
    case DiagonalTrend::Nondecreasing: return "nondecreasing";
    case DiagonalTrend::NonMonotone: return "non_monotone";
  }
  return "unknown";
}

std::vector<DiagonalTrend> diagonal_trends(const LowerTriangular& l) {
  const std::size_t d = l.dim();
  std::vector<DiagonalTrend> trends;
  for (std::size_t off = 1; off < d; ++off) {
    bool up = false;
    bool down = false;
    for (std::size_t i = 0; i + off + 1 < d; ++i) {
      const double step = l(i + off + 1, i + 1) - l(i + off, i);
      up = up || step > 0.0;
      down = down || step < 0.0;
    }
    trends.push_back(up && down ? DiagonalTrend::NonMonotone
                     : up       ? DiagonalTrend::Nondecreasing
                     : down     ? DiagonalTrend::Nonincreasing
                                : DiagonalTrend::Constant);
  }
  return trends;
}

std::vector<PropertyReport> cholesky_conjecture_checks(const LowerTriangular& l) {
  const std::size_t d = l.dim();
  const std::string dims = "dim=" + std::to_string(d);

  PropertyReport entries = detail::named_report("entry_nonnegativity", dims);
  {
    detail::SlackTracker t(entries);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= i; ++j) t.at_least(i * d + j, l(i, j), 0.0);
  }

  PropertyReport main_diag = detail::named_report("main_diagonal_nonincreasing", dims);
  {
    detail::SlackTracker t(main_diag);
    for (std::size_t i = 0; i + 1 < d; ++i) t.at_least(i, l(i, i), l(i + 1, i + 1));
  }

  // Violation index encodes (offset, i) as offset * dim + i.
  PropertyReport all_diag = detail::named_report("all_diagonals_nonincreasing", dims);
  {
    detail::SlackTracker t(all_diag);
    for (std::size_t off = 1; off < d; ++off)
      for (std::size_t i = 0; i + off + 1 < d; ++i)
        t.at_least(off * d + i, l(i + off, i), l(i + off + 1, i + 1));
  }
  std::size_t nonincreasing = 0;
  std::size_t other = 0;
  for (DiagonalTrend trend : diagonal_trends(l)) {
    (trend == DiagonalTrend::Nonincreasing || trend == DiagonalTrend::Constant ? nonincreasing : other)++;
  }
  all_diag.checked_range += ", subdiagonals nonincreasing=" + std::to_string(nonincreasing) +
                            " other=" + std::to_string(other);

  if (d < 2) {
    main_diag.max_slack = 0.0;
    all_diag.max_slack = 0.0;
  }
  if (d < 3) all_diag.max_slack = 0.0;
  return {entries, main_diag, all_diag};
}

}  // namespace fgn
