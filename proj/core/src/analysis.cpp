#include "fgn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>

#include "fgn/covariance.hpp"
#include "fgn/error.hpp"
#include "fgn/recursion.hpp"
#include "parallel.hpp"

namespace fgn {
namespace {

constexpr double kEtaSeriesLimit = 0.4;
constexpr std::size_t kMaxSeriesTerms = 400;

void require_long_range(HurstParam h, const char* what) {
  if (h.regime() != Regime::LongRange) {
    throw Error(ErrorCode::DomainError, std::string(what) + " requires 1/2 < H < 1, got H=" +
                                            std::to_string(h.value()));
  }
}

struct GridPartial {
  std::vector<Counterexample> counterexamples;
  double min_margin = std::numeric_limits<double>::infinity();

  // margin > 0 is required; otherwise (h, n, k, margin) is recorded.
  void strict(double h, std::size_t n, std::size_t k, double margin) {
    min_margin = std::min(min_margin, margin);
    if (!(margin > 0.0)) counterexamples.push_back({h, n, k, margin});
  }
};

// Runs scan(triangle, partial) for every grid value and merges the partial
// results in (hurst, n, k) order.
template <typename Scan>
ConjectureReport scan_grid(const char* id, std::span<const double> h_grid, std::size_t n_max,
                           Scan scan) {
  if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");
  std::vector<HurstParam> params;
  params.reserve(h_grid.size());
  for (double h : h_grid) {
    params.emplace_back(h);
    require_long_range(params.back(), id);
  }

  std::vector<GridPartial> partials(params.size());
  detail::parallel_for(params.size(), [&](std::size_t i) {
    const CoefficientTriangle tri = coeff_triangle(params[i], n_max);
    scan(tri, partials[i]);
  });

  ConjectureReport report;
  report.conjecture_id = id;
  report.h_grid.assign(h_grid.begin(), h_grid.end());
  report.n_max = n_max;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (auto& p : partials) {
    report.min_margin = std::min(report.min_margin, p.min_margin);
    report.counterexamples.insert(report.counterexamples.end(), p.counterexamples.begin(),
                                  p.counterexamples.end());
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.hurst, a.n, a.k) < std::tie(b.hurst, b.n, b.k);
            });
  report.holds = report.counterexamples.empty();
  if (!std::isfinite(report.min_margin)) report.min_margin = 0.0;
  return report;
}

// sum_k c_k ratio^k, stopping once terms no longer change the sum.
double c_series(double two_h, double ratio) {
  double coeff = two_h * (two_h - 1.0);
  double power = 1.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < kMaxSeriesTerms && coeff != 0.0; ++k) {
    const double term = coeff * power;
    sum += term;
    if (std::abs(term) <= std::abs(sum) * 1e-18) break;
    const double kk = static_cast<double>(k + 1);
    coeff *= (two_h - 2.0 * kk) * (two_h - 2.0 * kk - 1.0) / ((2.0 * kk + 2.0) * (2.0 * kk + 1.0));
    power *= ratio;
  }
  return sum;
}

}  // namespace

ConjectureReport verify_positivity(std::span<const double> h_grid, std::size_t n_max) {
  return scan_grid("positivity", h_grid, n_max,
                   [](const CoefficientTriangle& tri, GridPartial& out) {
                     const double h = tri.hurst().value();
                     for (std::size_t n = 2; n <= tri.n_max(); ++n) {
                       const auto row = tri.row(n);
                       for (std::size_t k = 2; k <= n; ++k) out.strict(h, n, k, row[k - 2]);
                     }
                   });
}

ConjectureReport verify_first_largest(std::span<const double> h_grid, std::size_t n_max) {
  return scan_grid("first_largest", h_grid, n_max,
                   [](const CoefficientTriangle& tri, GridPartial& out) {
                     const double h = tri.hurst().value();
                     for (std::size_t n = 3; n <= tri.n_max(); ++n) {
                       const auto row = tri.row(n);
                       for (std::size_t k = 3; k <= n; ++k) out.strict(h, n, k, row[0] - row[k - 2]);
                     }
                   });
}

ConjectureReport verify_column_monotonicity(std::span<const double> h_grid, std::size_t n_max) {
  return scan_grid("column_monotonicity", h_grid, n_max,
                   [](const CoefficientTriangle& tri, GridPartial& out) {
                     const double h = tri.hurst().value();
                     for (std::size_t n = 2; n < tri.n_max(); ++n) {
                       const auto row = tri.row(n);
                       const auto below = tri.row(n + 1);
                       for (std::size_t k = 2; k <= n; ++k) {
                         out.strict(h, n, k, row[k - 2] - below[k - 2]);
                       }
                     }
                   });
}

ConjectureReport verify_row_nonmonotonicity(std::span<const double> h_grid, std::size_t n_max) {
  ConjectureReport report = scan_grid(
      "row_monotonicity", h_grid, n_max, [](const CoefficientTriangle& tri, GridPartial& out) {
        const double h = tri.hurst().value();
        for (std::size_t n = 3; n <= tri.n_max(); ++n) {
          const auto row = tri.row(n);
          bool recorded = false;
          for (std::size_t k = 3; k <= n; ++k) {
            const double drop = row[k - 3] - row[k - 2];
            out.min_margin = std::min(out.min_margin, drop);
            if (!(drop > 0.0) && !recorded) {
              out.counterexamples.push_back({h, n, k, -drop});
              recorded = true;
            }
          }
        }
      });
  report.descriptive = true;
  report.note = std::to_string(report.counterexamples.size()) + " non-monotone rows";
  return report;
}

PropertyReport check_posit2(HurstParam h) {
  require_long_range(h, "check_posit2");
  const double r1 = rho(h, 1);
  const double r2 = rho(h, 2);
  const double r3 = rho(h, 3);
  const double value = r2 + r2 * r2 - r1 * r1 - r1 * r3;
  PropertyReport report;
  report.property_name = "posit2";
  report.checked_range = "rho_1..rho_3";
  report.max_slack = value;
  if (!(value > 0.0)) {
    report.holds = false;
    report.first_violation = Violation{4, value, 0.0};
  }
  return report;
}

double psi(HurstParam h, double x) {
  require_long_range(h, "psi");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::DomainError, "psi is defined on [0, 1]; use psi_tail for x >= 1");
  }
  return (rho_cont(h, x) + rho_cont(h, x + 2.0)) / rho_cont(h, x + 1.0);
}

double psi_tail(HurstParam h, double x) {
  require_long_range(h, "psi_tail");
  if (!(x >= 1.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::DomainError, "psi_tail requires finite x >= 1");
  }
  return -2.0 + eta(h, 1.0 / (x + 1.0));
}

double eta(HurstParam h, double y) {
  if (h.regime() != Regime::LongRange && h.regime() != Regime::Degenerate) {
    throw Error(ErrorCode::DomainError, "eta requires 1/2 < H <= 1");
  }
  if (!(y > 0.0 && y <= 0.5)) throw Error(ErrorCode::DomainError, "eta requires 0 < y <= 1/2");
  const double a = h.two_h();
  if (y <= kEtaSeriesLimit) {
    const double y2 = y * y;
    return 4.0 * c_series(a, 4.0 * y2) / c_series(a, y2);
  }
  const double num = std::pow(1.0 + 2.0 * y, a) + std::pow(1.0 - 2.0 * y, a) - 2.0;
  const double den = std::pow(1.0 + y, a) + std::pow(1.0 - y, a) - 2.0;
  return num / den;
}

std::vector<double> eta_c_coeffs(HurstParam h, std::size_t k_max) {
  const double a = h.two_h();
  std::vector<double> c(k_max + 1);
  c[0] = a * (a - 1.0);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    c[k] = c[k - 1] * (a - 2.0 * kk) * (a - 2.0 * kk - 1.0) / ((2.0 * kk + 2.0) * (2.0 * kk + 1.0));
  }
  return c;
}

std::vector<double> eta_b_coeffs(HurstParam h, std::size_t k_max) {
  const std::vector<double> c = eta_c_coeffs(h, k_max);
  if (std::abs(c[0]) < 1e-300) {
    throw Error(ErrorCode::DegenerateC0, "c_0 = 2H(2H-1) vanishes at H = 1/2");
  }
  std::vector<double> b(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    double s = std::ldexp(c[k], static_cast<int>(2 * k + 2));
    for (std::size_t l = 1; l <= k; ++l) s -= c[l] * b[k - l];
    b[k] = s / c[0];
  }
  return b;
}

ConjectureReport check_b_positivity(std::span<const double> h_grid, std::size_t k_max) {
  ConjectureReport report;
  report.conjecture_id = "b_positivity";
  report.h_grid.assign(h_grid.begin(), h_grid.end());
  report.n_max = k_max;
  report.min_margin = std::numeric_limits<double>::infinity();
  double largest = 0.0;
  for (double hv : h_grid) {
    const HurstParam h(hv);
    require_long_range(h, "check_b_positivity");
    const std::vector<double> b = eta_b_coeffs(h, k_max);
    for (std::size_t k = 0; k < b.size(); ++k) {
      report.min_margin = std::min(report.min_margin, b[k]);
      largest = std::max(largest, std::abs(b[k]));
      if (!(b[k] > 0.0)) report.counterexamples.push_back({hv, 0, k, b[k]});
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.hurst, a.k) < std::tie(b.hurst, b.k);
            });
  report.holds = report.counterexamples.empty();
  if (!std::isfinite(report.min_margin)) report.min_margin = 0.0;
  std::ostringstream note;
  note.precision(6);
  note << "max|b_k|=" << largest;
  report.note = note.str();
  return report;
}

double psi_argmax(HurstParam h, std::size_t points) {
  if (points < 2) throw Error(ErrorCode::InvalidArgument, "need at least two grid points");
  double best_x = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (double x : uniform_grid(0.0, 1.0, points)) {
    const double v = psi(h, x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

}  // namespace fgn
