#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgn/hurst.hpp"
#include "output.hpp"

namespace fgn::cli {

enum class Method { Solve, Recurrence, Cramer };
enum class Suite { Covariance, Conjectures, Cholesky, Psi, All };

[[nodiscard]] OutputRecord coeffs_record(HurstParam h, std::size_t n, Method method, Format format);
[[nodiscard]] OutputRecord table_record(HurstParam h, std::size_t n_max, Method method);
[[nodiscard]] OutputRecord limits_record();
[[nodiscard]] OutputRecord psi_record(HurstParam h, const std::vector<double>& xs,
                                      const std::string& grid_spec);
[[nodiscard]] OutputRecord bench_record(HurstParam h, const std::vector<std::size_t>& ns,
                                        std::size_t reps, const std::string& n_spec);

struct VerifyOutcome {
  OutputRecord record;
  bool failed = false;
};

/// Rows (suite, check, hurst, n_max, status, margin, detail). status is PASS,
/// FAIL, NA (check undefined at that H) or INFO (descriptive, never fails).
[[nodiscard]] VerifyOutcome verify_record(Suite suite, const std::vector<double>& h_grid,
                                          const std::string& grid_spec, std::size_t n_max);

[[nodiscard]] std::string_view to_string(Method method) noexcept;
[[nodiscard]] std::string_view to_string(Suite suite) noexcept;

}  // namespace fgn::cli
