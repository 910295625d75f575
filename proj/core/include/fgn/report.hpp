#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fgn {

/// First failing comparison of a scanned inequality: lhs should have beaten rhs.
struct Violation {
  std::size_t index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t order = 0;  // difference order, complete-monotonicity scans only
};

/// Outcome of a finite numerical check of one analytic property.
///
/// holds is true iff first_violation is empty. max_slack is the smallest
/// margin observed over the scan (lhs - rhs for strict inequalities); for
/// tolerance checks of identities it carries the residual instead.
struct PropertyReport {
  std::string property_name;
  std::string checked_range;
  bool holds = true;
  std::optional<Violation> first_violation;
  double max_slack = 0.0;
};

struct Counterexample {
  double hurst = 0.0;
  std::size_t n = 0;
  std::size_t k = 0;
  double value = 0.0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Numerical evidence for a conjectured inequality over a Hurst grid.
///
/// Counterexamples are sorted by (hurst, n, k). A descriptive report records
/// an expected pattern (e.g. row non-monotonicity) rather than a claim that
/// should hold, so its counterexamples are findings, not failures.
struct ConjectureReport {
  std::string conjecture_id;
  std::vector<double> h_grid;
  std::size_t n_max = 0;
  bool holds = true;
  std::vector<Counterexample> counterexamples;
  double min_margin = 0.0;
  bool descriptive = false;
  std::string note;
};

}  // namespace fgn
