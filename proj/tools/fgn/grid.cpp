#include "grid.hpp"

#include <charconv>
#include <cmath>

namespace fgn::cli {
namespace {

constexpr std::size_t kMaxGridPoints = 1'000'000;

double parse_number(std::string_view text, std::string_view spec) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
    throw UsageError("bad number '" + std::string(text) + "' in grid '" + std::string(spec) + "'");
  }
  return value;
}

double snap(double v) { return std::round(v * 1e12) / 1e12; }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  std::vector<double> values;
  for (std::string_view item : split(spec, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      values.push_back(parse_number(parts[0], spec));
      continue;
    }
    if (parts.size() != 3) {
      throw UsageError("grid item '" + std::string(item) + "' is not start:stop:step");
    }
    const double start = parse_number(parts[0], spec);
    const double stop = parse_number(parts[1], spec);
    const double step = parse_number(parts[2], spec);
    if (!(step > 0.0) || stop < start) {
      throw UsageError("grid range '" + std::string(item) + "' needs step > 0 and stop >= start");
    }
    const double span = (stop - start) / step;
    if (span > static_cast<double>(kMaxGridPoints)) throw UsageError("grid range is too large");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      values.push_back(snap(start + static_cast<double>(i) * step));
    }
  }
  return values;
}

std::vector<std::size_t> parse_size_list(std::string_view spec) {
  std::vector<std::size_t> out;
  for (double v : parse_grid(spec)) {
    if (v < 0.0 || v != std::floor(v) || v > 1e9) {
      throw UsageError("'" + std::string(spec) + "' must list nonnegative integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace fgn::cli
