#include "fgn/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "fgn/error.hpp"
#include "fgn/recursion.hpp"
#include "fgn/toeplitz.hpp"

namespace fgn {
namespace {

constexpr std::array kMethods{BenchMethod::SolveLastRow, BenchMethod::SolveWholeTriangle,
                              BenchMethod::Recurrence};
constexpr double kMinSampleSeconds = 5e-3;

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// Keeps the optimizer from discarding a result.
volatile double g_sink = 0.0;

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

}  // namespace

std::string_view to_string(BenchMethod method) noexcept {
  switch (method) {
    case BenchMethod::SolveLastRow: return "SOLVE_LAST_ROW";
    case BenchMethod::SolveWholeTriangle: return "SOLVE_WHOLE_TRIANGLE";
    case BenchMethod::Recurrence: return "RECURRENCE";
  }
  return "UNKNOWN";
}

double run_method(BenchMethod method, HurstParam h, std::size_t n) {
  switch (method) {
    case BenchMethod::SolveLastRow:
      return sum(solve_system(h, n).gammas);
    case BenchMethod::SolveWholeTriangle: {
      double checksum = 0.0;
      for (std::size_t m = 2; m <= n; ++m) {
        const CoefficientRow row = solve_system(h, m);
        if (m == n) checksum = sum(row.gammas);
        g_sink = g_sink + row.gammas.back();
      }
      return checksum;
    }
    case BenchMethod::Recurrence:
      return sum(coeff_triangle(h, n).row(n));
  }
  return 0.0;
}

std::vector<BenchResult> run_bench(HurstParam h, std::span<const std::size_t> n_list,
                                   std::size_t reps) {
  if (reps < 3) throw Error(ErrorCode::InvalidArgument, "reps must be >= 3");
  for (std::size_t n : n_list) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "every n must be >= 2");
  }

  std::vector<BenchResult> results;
  for (std::size_t n : n_list) {
    // Warm-up runs double as the checksum comparison.
    std::array<double, kMethods.size()> checksums{};
    std::array<double, kMethods.size()> warmup{};
    for (std::size_t m = 0; m < kMethods.size(); ++m) {
      warmup[m] = seconds([&] { checksums[m] = run_method(kMethods[m], h, n); });
    }
    for (std::size_t m = 1; m < kMethods.size(); ++m) {
      if (!(std::abs(checksums[m] - checksums[0]) <= kChecksumTolerance)) {
        throw Error(ErrorCode::ChecksumMismatch,
                    std::string(to_string(kMethods[m])) + " disagrees with " +
                        std::string(to_string(kMethods[0])) + " at n=" + std::to_string(n));
      }
    }

    for (std::size_t m = 0; m < kMethods.size(); ++m) {
      const auto batch = static_cast<std::size_t>(
          std::max(1.0, std::ceil(kMinSampleSeconds / std::max(warmup[m], 1e-9))));
      std::vector<double> samples(reps);
      for (double& s : samples) {
        s = seconds([&] {
              for (std::size_t b = 0; b < batch; ++b) g_sink = g_sink + run_method(kMethods[m], h, n);
            }) /
            static_cast<double>(batch);
      }
      std::nth_element(samples.begin(), samples.begin() + reps / 2, samples.end());
      double median = samples[reps / 2];
      if (reps % 2 == 0) {
        median = 0.5 * (median + *std::max_element(samples.begin(), samples.begin() + reps / 2));
      }
      results.push_back({kMethods[m], n, median, reps, checksums[m], h.value()});
    }
  }
  return results;
}

double loglog_slope(std::span<const BenchResult> results, BenchMethod method) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const BenchResult& r : results) {
    if (r.method != method) continue;
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.wall_time));
  }
  if (xs.size() < 2) throw Error(ErrorCode::InvalidArgument, "slope needs two sizes");
  const double mx = sum(xs) / static_cast<double>(xs.size());
  const double my = sum(ys) / static_cast<double>(ys.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw Error(ErrorCode::InvalidArgument, "slope needs two distinct sizes");
  return sxy / sxx;
}

}  // namespace fgn
