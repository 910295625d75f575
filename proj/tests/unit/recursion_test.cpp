#include <gtest/gtest.h>

#include <cmath>

#include "fgn/covariance.hpp"
#include "fgn/error.hpp"
#include "fgn/recursion.hpp"
#include "golden/published_tables.hpp"

namespace fgn {
namespace {

TEST(CoeffTriangle, SeedIsRhoOne) {
  for (double h : {0.0, 0.3, 0.6, 0.99}) {
    const CoefficientTriangle tri = coeff_triangle(HurstParam(h), 2);
    EXPECT_EQ(tri.gamma(2, 2), rho(HurstParam(h), 1));
  }
}

TEST(CoeffTriangle, PublishedTables) {
  for (const auto& t : test::kPublishedTables) {
    const CoefficientTriangle tri = coeff_triangle(HurstParam(t.hurst), 10);
    for (std::size_t n = 2; n <= 10; ++n)
      for (std::size_t k = 2; k <= n; ++k)
        EXPECT_NEAR(tri.gamma(n, k), t.cells[n - 2][k - 2], 5e-6) << t.hurst << " " << n << " " << k;
  }
}

TEST(CoeffTriangle, MatchesSolve) {
  for (double h = 0.51; h < 1.0; h += 0.04) {
    const CoefficientTriangle tri = coeff_triangle(HurstParam(h), 200);
    for (std::size_t n : {2u, 3u, 10u, 57u, 128u, 200u}) {
      const CoefficientRow direct = solve_system(HurstParam(h), n);
      const auto rec = tri.row(n);
      for (std::size_t i = 0; i < rec.size(); ++i) EXPECT_NEAR(rec[i], direct.gammas[i], 1e-9);
    }
  }
}

TEST(CoeffTriangle, RowUpdateIdentity) {
  const CoefficientTriangle tri = coeff_triangle(HurstParam(0.85), 60);
  for (std::size_t n = 2; n < 60; ++n) {
    const double last = tri.gamma(n + 1, n + 1);
    for (std::size_t k = 2; k <= n; ++k) {
      const double rebuilt = tri.gamma(n + 1, k) + last * tri.gamma(n, n - k + 2);
      EXPECT_NEAR(rebuilt, tri.gamma(n, k), 4 * std::numeric_limits<double>::epsilon());
    }
  }
}

TEST(CoeffTriangle, ResidualAndDenominator) {
  for (double h : {0.55, 0.75, 0.97}) {
    const CoefficientTriangle tri = coeff_triangle(HurstParam(h), 150);
    const AutocovSeq rho = autocov_seq(HurstParam(h), 150);
    for (std::size_t n = 2; n <= 150; n += 7) {
      const CoefficientRow row = tri.to_row(n);
      EXPECT_LE(system_residual(row, rho.view()), 1e-9);
      const double v = prediction_error_variance(row, rho.view());
      EXPECT_GT(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(CoeffTriangle, IndependentAndZero) {
  const CoefficientTriangle half = coeff_triangle(HurstParam(0.5), 6);
  for (std::size_t n = 2; n <= 6; ++n)
    for (double g : half.row(n)) EXPECT_EQ(g, 0.0);
  const CoefficientRow zero = last_row(HurstParam(0.0), 5);
  for (std::size_t k = 2; k <= 5; ++k) EXPECT_NEAR(zero.gamma(k), -(5.0 - k + 1) / 5.0, 1e-14);
}

TEST(CoeffTriangle, QuadraticOperationCount) {
  const auto ops = [](std::size_t n) { return coeff_triangle(HurstParam(0.7), n).op_count(); };
  for (std::size_t n : {100u, 200u}) {
    const double ratio = static_cast<double>(ops(2 * n)) / static_cast<double>(ops(n));
    EXPECT_GE(ratio, 3.6);
    EXPECT_LE(ratio, 4.4);
  }
}

TEST(CoeffTriangle, Errors) {
  EXPECT_THROW((void)coeff_triangle(HurstParam(1.0), 4), Error);
  EXPECT_THROW((void)coeff_triangle(HurstParam(0.7), 1), Error);
}

TEST(LastRow, EqualsTriangleRow) {
  for (double h : {0.6, 0.99}) {
    const CoefficientTriangle tri = coeff_triangle(HurstParam(h), 80);
    const CoefficientRow row = last_row(HurstParam(h), 80);
    const auto ref = tri.row(80);
    ASSERT_EQ(row.gammas.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(row.gammas[i], ref[i]);
  }
  const CoefficientRow r = last_row(HurstParam(0.99), 10);
  const double expected[] = {0.66628, 0.04227, 0.06885, 0.04111, 0.03363,
                             0.02870, 0.02735, 0.02560, 0.05582};
  for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(r.gammas[i], expected[i], 5e-6);
  EXPECT_NEAR(last_row(HurstParam(0.6), 2).gamma(2), 0.14870, 5e-6);
}

}  // namespace
}  // namespace fgn
