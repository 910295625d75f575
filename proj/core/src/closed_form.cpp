#include "fgn/closed_form.hpp"

#include <cmath>

#include "fgn/covariance.hpp"
#include "fgn/error.hpp"

namespace fgn {
namespace {

struct FirstLags {
  double r1, r2, r3;
};

FirstLags first_lags(HurstParam h) {
  if (h.regime() == Regime::Degenerate) {
    throw Error(ErrorCode::SingularRegime, "closed forms are undefined at H = 1");
  }
  return {rho(h, 1), rho(h, 2), rho(h, 3)};
}

}  // namespace

std::array<double, 2> gamma3(HurstParam h) {
  const auto [r1, r2, r3] = first_lags(h);
  const double denom = 1.0 - r1 * r1;
  return {r1 * (1.0 - r2) / denom, (r2 - r1 * r1) / denom};
}

std::array<double, 3> gamma4(HurstParam h) {
  const auto [r1, r2, r3] = first_lags(h);
  const double r1s = r1 * r1;
  const double r2s = r2 * r2;
  // (1-r2)(1-r1^2) + (1-r2)(r2-r1^2)
  const double reduced = 1.0 + r2 - 2.0 * r1s;
  const double denom = (1.0 - r2) * reduced;

  const double num2 = r1 + r1s * r3 + r1 * r2s - r2 * r3 - r1s * r1 - r1 * r2;
  const double g3 = (r2 + r2s - r1s - r1 * r3) / reduced;
  const double num4 = r1s * r1 + r1 * r2s - 2.0 * r1 * r2 + r3 - r1s * r3;
  return {num2 / denom, g3, num4 / denom};
}

std::array<double, 3> gamma4_expanded(HurstParam h) {
  const auto [r1, r2, r3] = first_lags(h);
  const double denom = 1.0 + 2.0 * r1 * r1 * r2 - r2 * r2 - 2.0 * r1 * r1;
  const double num2 = r1 + r1 * r1 * r3 + r1 * r2 * r2 - r2 * r3 - r1 * r1 * r1 - r1 * r2;
  const double num3 = r1 * r1 * r2 - r2 * r2 * r2 + r1 * r2 * r3 - r1 * r1 + r2 - r1 * r3;
  const double num4 = r1 * r1 * r1 + r1 * r2 * r2 - 2.0 * r1 * r2 + r3 - r1 * r1 * r3;
  return {num2 / denom, num3 / denom, num4 / denom};
}

std::array<double, 2> limits_n3() {
  const double l4 = std::log(4.0);
  const double l9 = std::log(9.0);
  const double l16 = std::log(16.0);
  return {(9.0 * l9 - 8.0 * l4) / (8.0 * l4), (8.0 * l16 - 9.0 * l9) / (8.0 * l4)};
}

std::array<double, 3> limits_n4() {
  const double l2 = std::log(2.0);
  const double l4 = std::log(4.0);
  const double l6 = std::log(6.0);
  const double l9 = std::log(9.0);
  const double l12 = std::log(12.0);
  const double l18 = std::log(18.0);
  const double denom = 96.0 * l12 * l12 - 640.0 * l2 * l2 - 51.0 * l9 * l9;
  const double g2 = (531.0 * l4 * l4 + 72.0 * l6 * l6 + 51.0 * l9 * l9 - 384.0 * l12 * l12 +
                     108.0 * l18 * l18) /
                    denom;
  const double g3 = (48.0 * l2 - 15.0 * l9) / (16.0 * l2 - 3.0 * l9);
  const double g4 = (108.0 * l18 * l18 - 364.0 * l2 * l2 - 216.0 * l2 * l9 - 81.0 * l9 * l9) / denom;
  return {g2, g3, g4};
}

CoefficientRow gamma_h_zero(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  CoefficientRow row{HurstParam(0.0), n, std::vector<double>(n - 1)};
  const double dn = static_cast<double>(n);
  for (std::size_t k = 2; k <= n; ++k) row.gammas[k - 2] = -static_cast<double>(n - k + 1) / dn;
  return row;
}

CoefficientRow gamma_h_half(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  return CoefficientRow{HurstParam(0.5), n, std::vector<double>(n - 1, 0.0)};
}

double gamma4_crossing(double lo, double hi, double tol) {
  auto gap = [](double h) {
    const auto g = gamma4(HurstParam(h));
    return g[1] - g[2];
  };
  double f_lo = gap(lo);
  if (f_lo * gap(hi) > 0.0) {
    throw Error(ErrorCode::DomainError, "Gamma_4^3 - Gamma_4^4 has no sign change on the bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = gap(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace fgn
