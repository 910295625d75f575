#include "fgn/montecarlo.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fgn/error.hpp"
#include "parallel.hpp"

namespace fgn {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::size_t kPathsPerTask = 4096;

std::uint64_t finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double normal_at(std::uint64_t key, std::uint64_t counter) {
  const double u = uniform_at(key, counter);
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * u);
}

}  // namespace

double uniform_at(std::uint64_t seed, std::uint64_t counter) noexcept {
  const std::uint64_t x = finalize(finalize(seed) + (counter + 1) * kGolden);
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

SamplePaths simulate_fgn(HurstParam h, std::size_t n, std::size_t paths, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  if (paths < 1) throw Error(ErrorCode::InvalidArgument, "paths must be >= 1");
  // build_matrix(h, m) has dimension m - 1.
  const LowerTriangular l = cholesky_factor(build_matrix(h, n + 1));

  SamplePaths out{h, n, paths, seed, kGeneratorId, std::vector<double>(paths * n)};
  const std::size_t tasks = (paths + kPathsPerTask - 1) / kPathsPerTask;
  detail::parallel_for(tasks, [&](std::size_t t) {
    std::vector<double> z(n);
    const std::size_t end = std::min(paths, (t + 1) * kPathsPerTask);
    for (std::size_t p = t * kPathsPerTask; p < end; ++p) {
      for (std::size_t j = 0; j < n; ++j) z[j] = normal_at(seed, p * n + j);
      double* row = out.data.data() + p * n;
      for (std::size_t i = 0; i < n; ++i) {
        const auto li = l.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j <= i; ++j) s += li[j] * z[j];
        row[i] = s;
      }
    }
  });
  return out;
}

OlsEstimate fit_ols(const SamplePaths& samples) {
  const std::size_t n = samples.n;
  const std::size_t count = samples.paths;
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  if (count < 10 * n) {
    throw Error(ErrorCode::InvalidArgument,
                "need at least 10 n paths, got " + std::to_string(count));
  }
  const auto p = static_cast<Eigen::Index>(n - 1);

  // Fixed summation order, path by path.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(p, p);
  Eigen::VectorXd xty = Eigen::VectorXd::Zero(p);
  for (std::size_t r = 0; r < count; ++r) {
    const auto path = samples.path(r);
    const Eigen::Map<const Eigen::VectorXd> x(path.data() + 1, p);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(x);
    xty += path[0] * x;
  }
  const double scale = 1.0 / static_cast<double>(count);
  gram = gram.selfadjointView<Eigen::Lower>();
  gram *= scale;
  xty *= scale;

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() < kMinGramPivot) {
    throw Error(ErrorCode::IllConditioned, "sample Gram matrix is ill-conditioned");
  }
  const Eigen::VectorXd beta = ldlt.solve(xty);

  double rss = 0.0;
  for (std::size_t r = 0; r < count; ++r) {
    const auto path = samples.path(r);
    const Eigen::Map<const Eigen::VectorXd> x(path.data() + 1, p);
    const double e = path[0] - x.dot(beta);
    rss += e * e;
  }
  const double sigma2 = rss / static_cast<double>(count - n + 1);
  const Eigen::MatrixXd inv = ldlt.solve(Eigen::MatrixXd::Identity(p, p));

  std::vector<double> errors(n - 1);
  for (Eigen::Index k = 0; k < p; ++k) {
    errors[static_cast<std::size_t>(k)] = std::sqrt(sigma2 * scale * inv(k, k));
  }
  OlsEstimate est{CoefficientRow{samples.hurst, n, std::vector<double>(beta.begin(), beta.end())},
                  std::move(errors), sigma2};
  return est;
}

CoefficientRow estimate_coeffs_ols(const SamplePaths& samples) {
  return fit_ols(samples).coefficients;
}

std::vector<double> empirical_covariance(const SamplePaths& samples) {
  const std::size_t n = samples.n;
  std::vector<double> cov(n * n, 0.0);
  for (std::size_t r = 0; r < samples.paths; ++r) {
    const auto path = samples.path(r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) cov[i * n + j] += path[i] * path[j];
  }
  const double scale = 1.0 / static_cast<double>(samples.paths);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      cov[i * n + j] *= scale;
      cov[j * n + i] = cov[i * n + j];
    }
  }
  return cov;
}

}  // namespace fgn
