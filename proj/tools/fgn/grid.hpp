#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgn::cli {

/// Malformed command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated items, each a single value or start:stop:step. A range
/// never passes stop and includes it when it lies on the grid up to rounding.
/// Values are snapped to 12 decimals so that 0.51:0.99:0.01 gives 0.51, ...,
/// 0.99 exactly as typed.
[[nodiscard]] std::vector<double> parse_grid(std::string_view spec);

/// The same syntax restricted to nonnegative integers.
[[nodiscard]] std::vector<std::size_t> parse_size_list(std::string_view spec);

}  // namespace fgn::cli
