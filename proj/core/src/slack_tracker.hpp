#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "fgn/report.hpp"

namespace fgn::detail {

inline PropertyReport named_report(std::string name, std::string range) {
  PropertyReport report;
  report.property_name = std::move(name);
  report.checked_range = std::move(range);
  return report;
}

// Folds a stream of inequality checks into a PropertyReport: keeps the
// smallest margin and the first violation.
class SlackTracker {
 public:
  explicit SlackTracker(PropertyReport& report) : report_(report) {
    report_.holds = true;
    report_.first_violation.reset();
    report_.max_slack = std::numeric_limits<double>::infinity();
  }

  // lhs > rhs
  void strict(std::size_t index, double lhs, double rhs) { record(index, lhs, rhs, lhs - rhs > 0.0, 0); }

  // lhs >= rhs - tol
  void at_least(std::size_t index, double lhs, double rhs, double tol = 0.0, std::size_t order = 0) {
    record(index, lhs, rhs, lhs - rhs >= -tol, order);
  }

 private:
  void record(std::size_t index, double lhs, double rhs, bool ok, std::size_t order) {
    report_.max_slack = std::min(report_.max_slack, lhs - rhs);
    if (!ok && report_.holds) {
      report_.holds = false;
      report_.first_violation = Violation{index, lhs, rhs, order};
    }
  }

  PropertyReport& report_;
};

}  // namespace fgn::detail
