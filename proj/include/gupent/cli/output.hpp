#pragma once

// Tabular command output with an ordered summary block. Numbers are rendered
// with 9 significant digits in every format.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace gupent::cli {

/// Empty (null), a real, an integer, or text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Column {
  std::string name;
  std::string unit;  ///< "1" for dimensionless quantities
};

struct SummaryEntry {
  std::string label;
  Cell value;
  std::string unit;
};

struct OutputRecord {
  std::string command;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<SummaryEntry> summary;
};

enum class Format { csv, json, text };

Format parse_format(const std::string& name);

/// "{:.9g}" with "inf"/"-inf"/"nan" spelled out.
std::string format_number(double v);

void render(std::ostream& out, const OutputRecord& record, Format format);

}  // namespace gupent::cli
