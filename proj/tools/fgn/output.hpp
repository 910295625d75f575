#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fgn::cli {

inline constexpr std::string_view kSchemaVersion = "fgn/1";

enum class Format { Csv, Json, Pretty };

/// A blank cell (monostate) is an empty csv field, null in json and spaces in
/// pretty output.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Column {
  std::string name;
  // Pretty output only. decimals < 0 selects the shortest round-trip form.
  int decimals = 5;
  bool scientific = false;
  bool left_align = false;
};

struct OutputRecord {
  std::string schema_version{kSchemaVersion};
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, locale independent.
[[nodiscard]] std::string format_full(double value);

/// Shortest text that reads back to the same double.
[[nodiscard]] std::string format_shortest(double value);

/// Fixed point with `decimals` places; a rounded negative zero prints as zero.
[[nodiscard]] std::string format_fixed(double value, int decimals);

void write_csv(std::ostream& os, const OutputRecord& record);
void write_json(std::ostream& os, const OutputRecord& record);
void write_pretty(std::ostream& os, const OutputRecord& record);
void write(std::ostream& os, const OutputRecord& record, Format format);

}  // namespace fgn::cli
