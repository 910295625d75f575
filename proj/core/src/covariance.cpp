#include "fgn/covariance.hpp"

#include <cmath>
#include <string>

#include "fgn/error.hpp"
#include "slack_tracker.hpp"

namespace fgn {
namespace {

using detail::named_report;
using detail::SlackTracker;

constexpr double kSeriesThreshold = 2.0;
constexpr std::size_t kMaxSeriesTerms = 400;

double abs_pow(double x, double exponent) {
  x = std::abs(x);
  return x == 0.0 ? 0.0 : std::pow(x, exponent);
}

// (1+y)^{2H} + (1-y)^{2H} - 2 = sum_{j>=0} c_j y^{2j+2}, |y| <= 1/2.
// Every c_j has the sign of 2H-1, so the partial sums never cancel.
double even_binomial_remainder(double two_h, double y) {
  const double y2 = y * y;
  double coeff = two_h * (two_h - 1.0);  // c_0
  double power = y2;
  double sum = 0.0;
  for (std::size_t j = 0; j < kMaxSeriesTerms && coeff != 0.0; ++j) {
    const double term = coeff * power;
    sum += term;
    if (std::abs(term) <= std::abs(sum) * 1e-18) break;
    const double jj = static_cast<double>(j + 1);
    coeff *= (two_h - 2.0 * jj) * (two_h - 2.0 * jj - 1.0) / ((2.0 * jj + 2.0) * (2.0 * jj + 1.0));
    power *= y2;
  }
  return sum;
}

std::string range_text(std::size_t lo, std::size_t hi) {
  return "k=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

double rho_cont(HurstParam h, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::DomainError, "rho_cont requires finite x >= 0");
  }
  const double a = h.two_h();
  if (h.regime() == Regime::Degenerate) return 1.0;
  if (x >= kSeriesThreshold) {
    return 0.5 * std::pow(x, a) * even_binomial_remainder(a, 1.0 / x);
  }
  return 0.5 * (abs_pow(x + 1.0, a) - 2.0 * abs_pow(x, a) + abs_pow(x - 1.0, a));
}

double rho(HurstParam h, std::size_t k) {
  if (k == 0) return 1.0;
  return rho_cont(h, static_cast<double>(k));
}

AutocovSeq autocov_seq(HurstParam h, std::size_t m) {
  AutocovSeq seq{h, {}};
  seq.values.resize(m + 1);
  for (std::size_t k = 0; k <= m; ++k) seq.values[k] = rho(h, k);
  return seq;
}

PropertyReport check_identity_r1r2r3(HurstParam h, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double r1 = rho(h, 1);
  const double r2 = rho(h, 2);
  const double r3 = rho(h, 3);
  const double lhs = r2 - r1 * r1;
  const double rhs = 0.5 * (r1 - r3);
  const double residual = std::abs(lhs - rhs);

  PropertyReport report;
  report.property_name = "identity_r1r2r3";
  report.checked_range = "k=1..3";
  report.max_slack = residual;
  if (residual > tol) {
    report.holds = false;
    report.first_violation = Violation{2, lhs, rhs};
  }
  return report;
}

std::vector<PropertyReport> check_rho_properties(HurstParam h, std::size_t m) {
  const Regime regime = h.regime();
  if (regime != Regime::LongRange && regime != Regime::ShortRange) {
    throw Error(ErrorCode::NotApplicable,
                "strict rho inequalities are vacuous for H=" + std::to_string(h.value()));
  }
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "check_rho_properties requires m >= 3");

  const AutocovSeq seq = autocov_seq(h, m);
  const auto& r = seq.values;
  std::vector<PropertyReport> reports;

  if (regime == Regime::LongRange) {
    PropertyReport monotone = named_report("monotonicity_positivity", range_text(1, m));
    {
      SlackTracker t(monotone);
      for (std::size_t k = 1; k <= m; ++k) {
        t.strict(k, r[k - 1], r[k]);
        t.strict(k, r[k], 0.0);
      }
    }
    PropertyReport convex = named_report("convexity", range_text(1, m - 1));
    {
      SlackTracker t(convex);
      for (std::size_t k = 1; k < m; ++k) t.strict(k, r[k - 1] - r[k], r[k] - r[k + 1]);
    }
    PropertyReport logconvex = named_report("log_convexity", range_text(1, m - 1));
    {
      SlackTracker t(logconvex);
      for (std::size_t k = 1; k < m; ++k) t.strict(k, r[k - 1] * r[k + 1], r[k] * r[k]);
    }
    PropertyReport r13 = named_report("rho1_sq_lt_rho3", "k=1,3");
    {
      SlackTracker t(r13);
      t.strict(3, r[3], r[1] * r[1]);
    }
    reports = {monotone, convex, logconvex, r13};
  } else {
    PropertyReport monotone = named_report("negativity_increase", range_text(2, m));
    {
      SlackTracker t(monotone);
      for (std::size_t k = 2; k <= m; ++k) {
        t.strict(k, r[k], r[k - 1]);
        t.strict(k, 0.0, r[k]);
      }
    }
    PropertyReport concave = named_report("concavity", range_text(2, m - 1));
    {
      SlackTracker t(concave);
      for (std::size_t k = 2; k < m; ++k) t.strict(k, r[k] - r[k + 1], r[k - 1] - r[k]);
    }
    PropertyReport logconvex = named_report("log_convexity", range_text(2, m - 1));
    {
      SlackTracker t(logconvex);
      for (std::size_t k = 2; k < m; ++k) t.strict(k, r[k - 1] * r[k + 1], r[k] * r[k]);
    }
    reports = {monotone, concave, logconvex};
  }
  return reports;
}

PropertyReport check_complete_monotonicity(HurstParam h, std::size_t max_order, std::size_t m) {
  if (max_order > kMaxCmOrder) {
    throw Error(ErrorCode::OrderTooHigh, "difference order above 12 is dominated by rounding");
  }
  if (m < max_order + 2) throw Error(ErrorCode::InvalidArgument, "need m >= max_order + 2");
  const Regime regime = h.regime();
  if (regime == Regime::Zero || regime == Regime::Degenerate) {
    throw Error(ErrorCode::NotApplicable, "complete monotonicity is checked for 0 < H < 1");
  }

  const double sign = regime == Regime::ShortRange ? -1.0 : 1.0;
  // diff[i] holds (Delta^j f)_{k} for k = i + 1.
  std::vector<double> diff(m);
  for (std::size_t k = 1; k <= m; ++k) diff[k - 1] = sign * rho(h, k);

  PropertyReport report;
  report.property_name = regime == Regime::ShortRange ? "complete_monotonicity(-rho)"
                                                      : "complete_monotonicity(rho)";
  report.checked_range = "j=0.." + std::to_string(max_order) + ", k=1.." + std::to_string(m);
  SlackTracker t(report);
  double alternating = 1.0;
  for (std::size_t j = 0; j <= max_order; ++j) {
    const double tol = std::ldexp(1e-12, static_cast<int>(j));
    for (std::size_t i = 0; i < diff.size(); ++i) {
      t.at_least(i + 1, alternating * diff[i], 0.0, tol, j);
    }
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    alternating = -alternating;
  }
  return report;
}

}  // namespace fgn
