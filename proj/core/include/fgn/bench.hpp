#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fgn/hurst.hpp"

namespace fgn {

enum class BenchMethod {
  SolveLastRow,        // one Cholesky solve of order n
  SolveWholeTriangle,  // Cholesky solves of every order 2..n
  Recurrence,          // the order-update recurrence up to n
};

[[nodiscard]] std::string_view to_string(BenchMethod method) noexcept;

struct BenchResult {
  BenchMethod method = BenchMethod::Recurrence;
  std::size_t n = 0;
  double wall_time = 0.0;  // median seconds per run
  std::size_t reps = 0;
  double checksum = 0.0;   // sum of Gamma_n^k over k
  double hurst = 0.0;
};

/// Runs one method once and returns its checksum.
double run_method(BenchMethod method, HurstParam h, std::size_t n);

/// For each n, all three methods in enum order. A discarded warm-up run sets
/// how many runs go into one timed sample (at least 1, enough to fill a few
/// milliseconds); wall_time is the median sample divided by that count.
/// Checksums must agree within 1e-6 before any timing is taken
/// (ChecksumMismatch otherwise). Requires reps >= 3 and every n >= 2.
/// Single-threaded.
[[nodiscard]] std::vector<BenchResult> run_bench(HurstParam h, std::span<const std::size_t> n_list,
                                                 std::size_t reps);

/// Least-squares slope of log(wall_time) against log(n) over the results of
/// one method. Needs two distinct n.
[[nodiscard]] double loglog_slope(std::span<const BenchResult> results, BenchMethod method);

inline constexpr double kChecksumTolerance = 1e-6;

}  // namespace fgn
