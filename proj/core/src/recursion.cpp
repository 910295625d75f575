#include "fgn/recursion.hpp"

#include <string>

#include "fgn/covariance.hpp"
#include "fgn/error.hpp"

namespace fgn {
namespace {

std::size_t row_offset(std::size_t m) { return (m - 2) * (m - 1) / 2; }

void require_inputs(HurstParam h, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  if (h.regime() == Regime::Degenerate) {
    throw Error(ErrorCode::SingularRegime, "H = 1 gives the singular all-ones covariance");
  }
}

// Writes row n+1 into next (size n) from row n in prev (size n-1).
// Returns the operation count of the step.
std::uint64_t advance(std::span<const double> prev, std::span<double> next,
                      std::span<const double> rho, HurstParam h) {
  const std::size_t n = prev.size() + 1;
  double numerator = rho[n];
  double denominator = 1.0;
  for (std::size_t k = 2; k <= n; ++k) {
    numerator -= prev[k - 2] * rho[n + 1 - k];
    denominator -= prev[k - 2] * rho[k - 1];
  }
  if (!(denominator > kMinPredictionVariance)) {
    throw Error(ErrorCode::DegenerateDenominator,
                "prediction-error variance " + std::to_string(denominator) + " at n=" +
                    std::to_string(n) + ", H=" + std::to_string(h.value()));
  }
  const double last = numerator / denominator;
  for (std::size_t k = 2; k <= n; ++k) next[k - 2] = prev[k - 2] - last * prev[n - k];
  next[n - 1] = last;
  return 3 * static_cast<std::uint64_t>(n - 1) + 1;
}

}  // namespace

CoefficientTriangle::CoefficientTriangle(HurstParam h, std::size_t n_max)
    : h_(h), n_max_(n_max), data_(row_offset(n_max + 1)) {}

std::span<const double> CoefficientTriangle::row(std::size_t m) const {
  if (m < 2 || m > n_max_) throw Error(ErrorCode::InvalidArgument, "row index out of range");
  return {data_.data() + row_offset(m), m - 1};
}

CoefficientRow CoefficientTriangle::to_row(std::size_t m) const {
  const auto r = row(m);
  return CoefficientRow{h_, m, std::vector<double>(r.begin(), r.end())};
}

CoefficientTriangle coeff_triangle(HurstParam h, std::size_t n_max) {
  require_inputs(h, n_max);
  const AutocovSeq seq = autocov_seq(h, n_max - 1);
  CoefficientTriangle tri(h, n_max);
  tri.data_[0] = seq[1];
  for (std::size_t n = 2; n < n_max; ++n) {
    const std::span<const double> prev(tri.data_.data() + row_offset(n), n - 1);
    const std::span<double> next(tri.data_.data() + row_offset(n + 1), n);
    tri.ops_ += advance(prev, next, seq.values, h);
  }
  return tri;
}

CoefficientRow last_row(HurstParam h, std::size_t n) {
  require_inputs(h, n);
  const AutocovSeq seq = autocov_seq(h, n - 1);
  std::vector<double> prev{seq[1]};
  std::vector<double> next;
  prev.reserve(n - 1);
  next.reserve(n - 1);
  for (std::size_t m = 2; m < n; ++m) {
    next.resize(m);
    advance(prev, next, seq.values, h);
    prev.swap(next);
  }
  return CoefficientRow{h, n, std::move(prev)};
}

}  // namespace fgn
