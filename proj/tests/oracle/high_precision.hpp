#pragma once

// Independent 50-digit reference evaluations. Everything here follows the
// defining formulas literally and shares no code with the library.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fgn::oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real abs_pow(const Real& x, const Real& p) {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  return x == 0 ? Real(0) : pow(abs(x), p);
}

/// (|x+1|^{2H} - 2|x|^{2H} + |x-1|^{2H}) / 2, with |0|^{2H} = 0.
inline Real rho(double h, double x) {
  const Real p = 2 * Real(h);
  const Real rx(x);
  if (x == 0.0) return Real(1);
  return (abs_pow(rx + 1, p) - 2 * abs_pow(rx, p) + abs_pow(rx - 1, p)) / 2;
}

inline Real psi(double h, double x) { return (rho(h, x) + rho(h, x + 2)) / rho(h, x + 1); }

inline Real eta(double h, double y) {
  using boost::multiprecision::pow;
  const Real p = 2 * Real(h);
  const Real ry(y);
  return (pow(1 + 2 * ry, p) + abs_pow(1 - 2 * ry, p) - 2) / (pow(1 + ry, p) + pow(1 - ry, p) - 2);
}

/// Solution of the normal equations by Gaussian elimination with partial
/// pivoting in 50 digits: Gamma_n^2..Gamma_n^n.
inline std::vector<double> solve(double h, std::size_t n) {
  const std::size_t d = n - 1;
  std::vector<Real> r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = rho(h, static_cast<double>(k));
  std::vector<std::vector<Real>> a(d, std::vector<Real>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = r[i > j ? i - j : j - i];
    a[i][d] = r[i + 1];
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < d; ++i) {
      if (abs(a[i][c]) > abs(a[piv][c])) piv = i;
    }
    if (a[piv][c] == 0) throw std::runtime_error("singular");
    std::swap(a[c], a[piv]);
    for (std::size_t i = c + 1; i < d; ++i) {
      const Real f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Real> x(d);
  for (std::size_t i = d; i-- > 0;) {
    Real s = a[i][d];
    for (std::size_t j = i + 1; j < d; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = static_cast<double>(x[i]);
  return out;
}

/// (-1)^j Delta^j rho at k from the binomial formula, not by repeated differencing.
inline Real cm_difference(double h, std::size_t j, std::size_t k) {
  Real sum = 0;
  Real binom = 1;
  for (std::size_t i = 0; i <= j; ++i) {
    const Real term = binom * rho(h, static_cast<double>(k + i));
    sum += (i % 2 == 0) ? term : Real(-term);
    binom = binom * Real(j - i) / Real(i + 1);
  }
  return sum;
}

}  // namespace fgn::oracle
