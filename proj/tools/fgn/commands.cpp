#include "commands.hpp"

#include <string>

#include "fgn/analysis.hpp"
#include "fgn/bench.hpp"
#include "fgn/closed_form.hpp"
#include "fgn/recursion.hpp"
#include "fgn/toeplitz.hpp"

namespace fgn::cli {
namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

CoefficientRow compute_row(HurstParam h, std::size_t n, Method method) {
  switch (method) {
    case Method::Solve: return solve_system(h, n);
    case Method::Cramer: return solve_cramer(h, n);
    case Method::Recurrence: break;
  }
  return last_row(h, n);
}

std::string k_label(std::size_t k) { return "k=" + std::to_string(k); }

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Solve: return "solve";
    case Method::Recurrence: return "recurrence";
    case Method::Cramer: return "cramer";
  }
  return "unknown";
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Covariance: return "covariance";
    case Suite::Conjectures: return "conjectures";
    case Suite::Cholesky: return "cholesky";
    case Suite::Psi: return "psi";
    case Suite::All: return "all";
  }
  return "unknown";
}

OutputRecord coeffs_record(HurstParam h, std::size_t n, Method method, Format format) {
  const CoefficientRow row = compute_row(h, n, method);
  OutputRecord rec;
  rec.command = "coeffs";
  rec.parameters = {{"hurst", format_shortest(h.value())},
                    {"n", std::to_string(n)},
                    {"method", std::string(to_string(method))}};
  if (format == Format::Pretty) {
    // One wide row, laid out like a line of the printed tables.
    rec.columns.push_back({"n"});
    std::vector<Cell> cells{as_int(n)};
    for (std::size_t k = 2; k <= n; ++k) {
      rec.columns.push_back({k_label(k)});
      cells.emplace_back(row.gamma(k));
    }
    rec.rows.push_back(std::move(cells));
    return rec;
  }
  rec.columns = {{"n"}, {"k"}, {"gamma"}};
  for (std::size_t k = 2; k <= n; ++k) rec.rows.push_back({as_int(n), as_int(k), row.gamma(k)});
  return rec;
}

OutputRecord table_record(HurstParam h, std::size_t n_max, Method method) {
  OutputRecord rec;
  rec.command = "table";
  rec.parameters = {{"hurst", format_shortest(h.value())},
                    {"n_max", std::to_string(n_max)},
                    {"method", std::string(to_string(method))}};
  rec.columns.push_back({"n"});
  for (std::size_t k = 2; k <= n_max; ++k) rec.columns.push_back({k_label(k)});

  auto emit = [&](std::size_t n, std::span<const double> gammas) {
    std::vector<Cell> cells(n_max, std::monostate{});
    cells[0] = as_int(n);
    for (std::size_t k = 2; k <= n; ++k) cells[k - 1] = gammas[k - 2];
    rec.rows.push_back(std::move(cells));
  };
  if (method == Method::Recurrence) {
    const CoefficientTriangle tri = coeff_triangle(h, n_max);
    for (std::size_t n = 2; n <= n_max; ++n) emit(n, tri.row(n));
  } else {
    for (std::size_t n = 2; n <= n_max; ++n) emit(n, compute_row(h, n, method).gammas);
  }
  return rec;
}

OutputRecord limits_record() {
  OutputRecord rec;
  rec.command = "limits";
  rec.columns = {{"n"}, {"k"}, {"limit", 6}};
  const auto l3 = limits_n3();
  const auto l4 = limits_n4();
  for (std::size_t k = 2; k <= 3; ++k) rec.rows.push_back({std::int64_t{3}, as_int(k), l3[k - 2]});
  for (std::size_t k = 2; k <= 4; ++k) rec.rows.push_back({std::int64_t{4}, as_int(k), l4[k - 2]});
  return rec;
}

OutputRecord psi_record(HurstParam h, const std::vector<double>& xs, const std::string& grid_spec) {
  OutputRecord rec;
  rec.command = "psi";
  rec.parameters = {{"hurst", format_shortest(h.value())}, {"x_grid", grid_spec}};
  rec.columns = {{"x"}, {"psi", 6}, {"y"}, {"eta", 6}};
  for (double x : xs) {
    if (x <= 1.0) {
      std::vector<Cell> row{x, psi(h, x), std::monostate{}, std::monostate{}};
      if (x == 1.0) {
        row[2] = 0.5;
        row[3] = eta(h, 0.5);
      }
      rec.rows.push_back(std::move(row));
    } else {
      const double y = 1.0 / (x + 1.0);
      rec.rows.push_back({x, psi_tail(h, x), y, eta(h, y)});
    }
  }
  return rec;
}

OutputRecord bench_record(HurstParam h, const std::vector<std::size_t>& ns, std::size_t reps,
                          const std::string& n_spec) {
  OutputRecord rec;
  rec.command = "bench";
  rec.parameters = {{"hurst", format_shortest(h.value())},
                    {"n_list", n_spec},
                    {"reps", std::to_string(reps)}};
  rec.columns = {{"method"}, {"n"}, {"hurst", -1}, {"reps"}, {"median_seconds", 3, true},
                 {"checksum", 9}};
  for (const BenchResult& r : run_bench(h, ns, reps)) {
    rec.rows.push_back({std::string(to_string(r.method)), as_int(r.n), r.hurst, as_int(r.reps),
                        r.wall_time, r.checksum});
  }
  return rec;
}

}  // namespace fgn::cli
