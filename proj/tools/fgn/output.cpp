#include "output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

namespace fgn::cli {
namespace {

template <typename... Args>
std::string to_chars_string(double value, Args... args) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, args...);
  return {buf.data(), res.ptr};
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_full(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(Visitor{}, cell);
}

std::string pretty_cell(const Cell& cell, const Column& column) {
  struct Visitor {
    const Column& col;
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const {
      if (col.decimals < 0) return format_shortest(v);
      return col.scientific ? to_chars_string(v, std::chars_format::scientific, col.decimals)
                            : format_fixed(v, col.decimals);
    }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{column}, cell);
}

void write_aligned_line(std::ostream& os, const std::vector<std::string>& cells,
                        const std::vector<std::size_t>& widths, const std::vector<Column>& columns) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ' ';
    const std::size_t pad = widths[i] - cells[i].size();
    if (!columns[i].left_align) line.append(pad, ' ');
    line += cells[i];
    if (columns[i].left_align) line.append(pad, ' ');
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  os << line << '\n';
}

}  // namespace

std::string format_full(double value) {
  return to_chars_string(value, std::chars_format::general, 17);
}

std::string format_shortest(double value) { return to_chars_string(value); }

std::string format_fixed(double value, int decimals) {
  std::string s = to_chars_string(value, std::chars_format::fixed, decimals);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void write_csv(std::ostream& os, const OutputRecord& record) {
  os << csv_escape("schema=" + record.schema_version) << ','
     << csv_escape("command=" + record.command);
  for (const auto& [key, value] : record.parameters) os << ',' << csv_escape(key + '=' + value);
  os << '\n';
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(record.columns[i].name);
  }
  os << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = record.schema_version;
  doc["command"] = record.command;
  doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.parameters) doc["parameters"][key] = value;
  auto& columns = doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : record.columns) columns.push_back(c.name);
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    auto& out = rows.emplace_back(nlohmann::ordered_json::array());
    for (const auto& cell : row) {
      std::visit(
          [&](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::monostate>) {
              out.push_back(nullptr);
            } else {
              out.push_back(v);
            }
          },
          cell);
    }
  }
  os << doc.dump(2) << '\n';
}

void write_pretty(std::ostream& os, const OutputRecord& record) {
  os << "# schema=" << record.schema_version << " command=" << record.command;
  for (const auto& [key, value] : record.parameters) os << ' ' << key << '=' << value;
  os << '\n';

  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> widths;
  std::vector<std::string> header;
  for (const auto& c : record.columns) {
    header.push_back(c.name);
    widths.push_back(c.name.size());
  }
  for (const auto& row : record.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(pretty_cell(row[i], record.columns[i]));
      widths[i] = std::max(widths[i], line.back().size());
    }
  }
  write_aligned_line(os, header, widths, record.columns);
  for (const auto& line : text) write_aligned_line(os, line, widths, record.columns);
}

void write(std::ostream& os, const OutputRecord& record, Format format) {
  switch (format) {
    case Format::Csv: write_csv(os, record); break;
    case Format::Json: write_json(os, record); break;
    case Format::Pretty: write_pretty(os, record); break;
  }
}

}  // namespace fgn::cli
