#pragma once

#include <Eigen/Core>

#include <span>

namespace fgn::detail {

// Dense symmetric Toeplitz matrix from its first row.
inline Eigen::MatrixXd dense_toeplitz(std::span<const double> first_row) {
  const auto d = static_cast<Eigen::Index>(first_row.size());
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) a(i, j) = first_row[static_cast<std::size_t>(i > j ? i - j : j - i)];
  return a;
}

}  // namespace fgn::detail
