#include <algorithm>
#include <limits>
#include <string>

#include "commands.hpp"
#include "fgn/analysis.hpp"
#include "fgn/covariance.hpp"
#include "fgn/error.hpp"
#include "fgn/toeplitz.hpp"

namespace fgn::cli {
namespace {

constexpr double kIdentityTolerance = 1e-12;
constexpr std::size_t kBCoeffOrder = 50;
constexpr std::size_t kPsiGridPoints = 101;

class Rows {
 public:
  Rows(OutputRecord& rec, std::size_t n_max) : rec_(rec), n_max_(n_max) {}

  void add(std::string_view suite, const std::string& check, Cell hurst, std::string_view status,
           Cell margin, std::string detail) {
    if (status == "FAIL") failed_ = true;
    rec_.rows.push_back({std::string(suite), check, std::move(hurst),
                         static_cast<std::int64_t>(n_max_), std::string(status), std::move(margin),
                         std::move(detail)});
  }

  void property(std::string_view suite, double h, const PropertyReport& r) {
    std::string detail = r.checked_range;
    if (r.first_violation) {
      const Violation& v = *r.first_violation;
      detail += "; first violation at index " + std::to_string(v.index);
      if (v.order > 0) detail += " order " + std::to_string(v.order);
      detail += ": " + format_full(v.lhs) + " vs " + format_full(v.rhs);
    }
    add(suite, r.property_name, h, r.holds ? "PASS" : "FAIL", r.max_slack, std::move(detail));
  }

  void conjecture(std::string_view suite, const ConjectureReport& r) {
    std::string detail = std::to_string(r.h_grid.size()) + " H values; " +
                         std::to_string(r.counterexamples.size()) + " counterexamples";
    if (!r.counterexamples.empty()) {
      const Counterexample& c = r.counterexamples.front();
      detail += "; first at H=" + format_shortest(c.hurst) + " n=" + std::to_string(c.n) +
                " k=" + std::to_string(c.k) + " value=" + format_full(c.value);
    }
    if (!r.note.empty()) detail += "; " + r.note;
    const std::string_view status = r.descriptive ? "INFO" : (r.holds ? "PASS" : "FAIL");
    add(suite, r.conjecture_id, std::monostate{}, status, r.min_margin, std::move(detail));
  }

  void not_applicable(std::string_view suite, const std::string& check, double h,
                      const std::string& why) {
    add(suite, check, h, "NA", std::monostate{}, why);
  }

  [[nodiscard]] bool failed() const noexcept { return failed_; }

 private:
  OutputRecord& rec_;
  std::size_t n_max_;
  bool failed_ = false;
};

bool long_range(double h) { return h > 0.5 && h < 1.0; }

void covariance_suite(Rows& rows, const std::vector<double>& grid, std::size_t n_max) {
  constexpr std::string_view suite = "covariance";
  const std::size_t m = std::max<std::size_t>(n_max, kDefaultCmOrder + 2);
  for (double hv : grid) {
    const HurstParam h(hv);
    rows.property(suite, hv, check_identity_r1r2r3(h, kIdentityTolerance));
    try {
      for (const auto& r : check_rho_properties(h, m)) rows.property(suite, hv, r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotApplicable) throw;
      rows.not_applicable(suite, "rho_properties", hv, e.what());
    }
    try {
      rows.property(suite, hv, check_complete_monotonicity(h, kDefaultCmOrder, m));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotApplicable) throw;
      rows.not_applicable(suite, "complete_monotonicity", hv, e.what());
    }
  }
}

std::vector<double> long_range_part(Rows& rows, std::string_view suite,
                                    const std::vector<double>& grid) {
  std::vector<double> inside;
  for (double h : grid) {
    if (long_range(h)) {
      inside.push_back(h);
    } else {
      rows.not_applicable(suite, "all", h, "checks are stated for 1/2 < H < 1");
    }
  }
  return inside;
}

void conjecture_suite(Rows& rows, const std::vector<double>& grid, std::size_t n_max) {
  constexpr std::string_view suite = "conjectures";
  const std::vector<double> inside = long_range_part(rows, suite, grid);
  if (inside.empty()) return;
  for (double h : inside) rows.property(suite, h, check_posit2(HurstParam(h)));
  rows.conjecture(suite, verify_positivity(inside, n_max));
  rows.conjecture(suite, verify_first_largest(inside, n_max));
  rows.conjecture(suite, verify_column_monotonicity(inside, n_max));
  rows.conjecture(suite, verify_row_nonmonotonicity(inside, n_max));
}

void cholesky_suite(Rows& rows, const std::vector<double>& grid, std::size_t n_max) {
  constexpr std::string_view suite = "cholesky";
  for (double hv : long_range_part(rows, suite, grid)) {
    const HurstParam h(hv);
    try {
      const LowerTriangular l = cholesky_factor(build_matrix(h, n_max + 1));
      rows.add(suite, "factorization", hv, "PASS", std::monostate{},
               "dim=" + std::to_string(l.dim()));
      for (const auto& r : cholesky_conjecture_checks(l)) rows.property(suite, hv, r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FactorizationFailure) throw;
      rows.add(suite, "factorization", hv, "FAIL", std::monostate{}, e.what());
    }
  }
}

void psi_suite(Rows& rows, const std::vector<double>& grid) {
  constexpr std::string_view suite = "psi";
  const std::vector<double> ys = uniform_grid(0.5 / kPsiGridPoints, 0.5, kPsiGridPoints);
  const std::vector<double> xs = uniform_grid(1.0, 100.0, kPsiGridPoints);
  const std::vector<double> inside = long_range_part(rows, suite, grid);
  for (double hv : inside) {
    const HurstParam h(hv);
    const double ends = psi(h, 0.0) - psi(h, 1.0);
    rows.add(suite, "psi_0_gt_psi_1", hv, ends > 0.0 ? "PASS" : "FAIL", ends, "x=0,1");

    double eta_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < ys.size(); ++i) {
      eta_margin = std::min(eta_margin, eta(h, ys[i]) - eta(h, ys[i - 1]));
    }
    rows.add(suite, "eta_increasing", hv, eta_margin > 0.0 ? "PASS" : "FAIL", eta_margin,
             std::to_string(ys.size()) + " points on (0,1/2]");

    double tail_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < xs.size(); ++i) {
      tail_margin = std::min(tail_margin, psi_tail(h, xs[i - 1]) - psi_tail(h, xs[i]));
    }
    rows.add(suite, "psi_tail_decreasing", hv, tail_margin > 0.0 ? "PASS" : "FAIL", tail_margin,
             std::to_string(xs.size()) + " points on [1,100]");

    rows.add(suite, "psi_argmax", hv, "INFO", psi_argmax(h, kPsiGridPoints),
             "grid maximiser of psi on [0,1]");
  }
  if (!inside.empty()) rows.conjecture(suite, check_b_positivity(inside, kBCoeffOrder));
}

}  // namespace

VerifyOutcome verify_record(Suite suite, const std::vector<double>& h_grid,
                            const std::string& grid_spec, std::size_t n_max) {
  VerifyOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "verify";
  rec.parameters = {{"suite", std::string(to_string(suite))},
                    {"hurst_grid", grid_spec},
                    {"n_max", std::to_string(n_max)}};
  rec.columns = {{"suite"},  {"check"},           {"hurst", -1},
                 {"n_max"},  {"status"},          {"margin", 3, true},
                 {"detail", 0, false, true}};

  // Validate the whole grid before any work.
  for (double h : h_grid) (void)HurstParam(h);

  Rows rows(rec, n_max);
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Covariance) covariance_suite(rows, h_grid, n_max);
  if (all || suite == Suite::Conjectures) conjecture_suite(rows, h_grid, n_max);
  if (all || suite == Suite::Cholesky) cholesky_suite(rows, h_grid, n_max);
  if (all || suite == Suite::Psi) psi_suite(rows, h_grid);
  out.failed = rows.failed();
  return out;
}

}  // namespace fgn::cli
