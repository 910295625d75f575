#include <gtest/gtest.h>

#include <cmath>

#include "fgn/covariance.hpp"
#include "fgn/error.hpp"
#include "fgn/toeplitz.hpp"
#include "golden/published_tables.hpp"
#include "oracle/high_precision.hpp"

namespace fgn {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidArgument;
}

TEST(BuildMatrix, Shape) {
  const SymToeplitz a = build_matrix(HurstParam(0.6), 3);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.entry(0, 0), 1.0);
  EXPECT_NEAR(a.entry(0, 1), 0.148698354997035, 1e-15);
  EXPECT_EQ(a.entry(0, 1), a.entry(1, 0));

  const SymToeplitz id = build_matrix(HurstParam(0.5), 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(id.entry(i, j), i == j ? 1.0 : 0.0);

  const SymToeplitz tri = build_matrix(HurstParam(0.0), 4);
  EXPECT_EQ(tri.entry(0, 1), -0.5);
  EXPECT_EQ(tri.entry(0, 2), 0.0);
}

TEST(BuildMatrix, Errors) {
  EXPECT_EQ(code_of([] { (void)build_matrix(HurstParam(1.0), 4); }), ErrorCode::SingularRegime);
  EXPECT_EQ(code_of([] { (void)build_matrix(HurstParam(0.7), 1); }), ErrorCode::InvalidArgument);
}

TEST(SolveSystem, PublishedRows) {
  for (const auto& t : test::kPublishedTables) {
    for (std::size_t n = 2; n <= 10; ++n) {
      const CoefficientRow row = solve_system(HurstParam(t.hurst), n);
      ASSERT_EQ(row.gammas.size(), n - 1);
      for (std::size_t k = 2; k <= n; ++k) {
        EXPECT_NEAR(row.gamma(k), t.cells[n - 2][k - 2], 5e-6) << t.hurst << " " << n << " " << k;
      }
    }
  }
}

TEST(SolveSystem, MatchesHighPrecision) {
  for (double h : {0.1, 0.51, 0.7, 0.9, 0.99}) {
    for (std::size_t n : {2u, 5u, 17u, 40u}) {
      const auto ref = oracle::solve(h, n);
      const CoefficientRow row = solve_system(HurstParam(h), n);
      for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(row.gammas[i], ref[i], 1e-11) << h << " " << n << " " << i;
      }
    }
  }
}

TEST(SolveSystem, Endpoints) {
  for (double g : solve_system(HurstParam(0.5), 7).gammas) EXPECT_EQ(g, 0.0);
  const CoefficientRow zero = solve_system(HurstParam(0.0), 10);
  for (std::size_t k = 2; k <= 10; ++k) {
    EXPECT_NEAR(zero.gamma(k), -static_cast<double>(10 - k + 1) / 10.0, 1e-12);
  }
  EXPECT_EQ(code_of([] { (void)solve_system(HurstParam(1.0), 3); }), ErrorCode::SingularRegime);
}

TEST(SolveSystem, ResidualAndVariance) {
  for (double h : {0.2, 0.6, 0.95}) {
    const CoefficientRow row = solve_system(HurstParam(h), 300);
    const AutocovSeq rho = autocov_seq(HurstParam(h), 300);
    EXPECT_LE(system_residual(row, rho.view()), 1e-10);
    const double v = prediction_error_variance(row, rho.view());
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(SolveCramer, AgreesWithSolve) {
  EXPECT_NEAR(solve_cramer(HurstParam(0.8), 3).gamma(2), 0.44379, 5e-6);
  EXPECT_NEAR(solve_cramer(HurstParam(0.8), 3).gamma(3), 0.13947, 5e-6);
  for (double g : solve_cramer(HurstParam(0.5), 3).gammas) EXPECT_EQ(g, 0.0);
  for (double h : {0.51, 0.6, 0.7, 0.8, 0.9, 0.99}) {
    for (std::size_t n = 2; n <= 13; ++n) {
      const auto a = solve_cramer(HurstParam(h), n);
      const auto b = solve_system(HurstParam(h), n);
      for (std::size_t i = 0; i < a.gammas.size(); ++i) {
        EXPECT_NEAR(a.gammas[i], b.gammas[i], 1e-9) << h << " " << n;
      }
    }
  }
  EXPECT_EQ(code_of([] { (void)solve_cramer(HurstParam(0.7), 14); }), ErrorCode::OrderTooLarge);
}

TEST(Cholesky, SmallClosedForm) {
  const double r1 = rho(HurstParam(0.8), 1);
  const LowerTriangular l = cholesky_factor(build_matrix(HurstParam(0.8), 3));
  EXPECT_NEAR(l(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(l(1, 0), r1, 1e-15);
  EXPECT_NEAR(l(1, 1), std::sqrt(1 - r1 * r1), 1e-15);
}

TEST(Cholesky, Reconstruction) {
  const SymToeplitz a = build_matrix(HurstParam(0.7), 10);
  EXPECT_LE(cholesky_factor(a).reconstruction_residual(a), 1e-12);
  const SymToeplitz big = build_matrix(HurstParam(0.95), 400);
  EXPECT_LE(cholesky_factor(big).reconstruction_residual(big), 1e-10 * 400);
  const LowerTriangular id = cholesky_factor(build_matrix(HurstParam(0.5), 6));
  for (std::size_t i = 0; i < id.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) EXPECT_EQ(id(i, j), i == j ? 1.0 : 0.0);
}

TEST(Cholesky, ConjectureChecks) {
  for (auto [h, n] : {std::pair{0.7, 50u}, std::pair{0.51, 20u}, std::pair{0.99, 300u}}) {
    const auto reports = cholesky_conjecture_checks(cholesky_factor(build_matrix(HurstParam(h), n)));
    ASSERT_EQ(reports.size(), 3u);
    for (const auto& r : reports) EXPECT_TRUE(r.holds) << h << " " << r.property_name;
  }
}

TEST(Cholesky, Trends) {
  const LowerTriangular l = cholesky_factor(build_matrix(HurstParam(0.8), 30));
  const auto trends = diagonal_trends(l);
  ASSERT_EQ(trends.size(), l.dim() - 1);
  // The last subdiagonal has a single entry.
  for (std::size_t i = 0; i + 1 < trends.size(); ++i) EXPECT_EQ(trends[i], DiagonalTrend::Nonincreasing) << i;
  EXPECT_EQ(trends.back(), DiagonalTrend::Constant);

  LowerTriangular up(3);
  up(0, 0) = 1;
  up(1, 1) = 2;
  up(2, 2) = 3;
  up(1, 0) = 0.5;
  up(2, 1) = 0.5;
  EXPECT_EQ(diagonal_trends(up)[0], DiagonalTrend::Constant);
  const auto reports = cholesky_conjecture_checks(up);
  EXPECT_FALSE(reports[1].holds);
  ASSERT_TRUE(reports[1].first_violation.has_value());
  EXPECT_EQ(reports[1].first_violation->index, 0u);
}

}  // namespace
}  // namespace fgn
