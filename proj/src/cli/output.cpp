#include "gupent/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>
#include <ostream>

#include "gupent/errors.hpp"

namespace gupent::cli {

namespace {

struct CellText {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& s) const { return s; }
};

std::string cell_text(const Cell& c) { return std::visit(CellText{}, c); }

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          // Round through the 9-digit text so JSON and CSV agree.
          if (!std::isfinite(v)) return format_number(v);
          return std::stod(format_number(v));
        } else {
          return v;
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render_csv(std::ostream& out, const OutputRecord& r) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    fmt::print(out, "{}{}", i ? "," : "", csv_escape(r.columns[i].name));
  }
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      fmt::print(out, "{}{}", i ? "," : "", csv_escape(cell_text(row[i])));
    }
    out << '\n';
  }
  for (const auto& s : r.summary) {
    fmt::print(out, "# {} = {}{}\n", s.label, cell_text(s.value),
               s.unit.empty() || s.unit == "1" ? "" : " " + s.unit);
  }
}

void render_json(std::ostream& out, const OutputRecord& r) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : r.columns) doc["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& cell : row) arr.push_back(cell_json(cell));
    doc["rows"].push_back(std::move(arr));
  }
  doc["summary"] = nlohmann::ordered_json::array();
  for (const auto& s : r.summary) {
    doc["summary"].push_back({{"label", s.label}, {"value", cell_json(s.value)}, {"unit", s.unit}});
  }
  out << doc.dump(2) << '\n';
}

void render_text(std::ostream& out, const OutputRecord& r) {
  std::vector<std::size_t> width(r.columns.size());
  std::vector<std::string> header(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    const auto& c = r.columns[i];
    header[i] = c.unit.empty() || c.unit == "1" ? c.name : fmt::format("{} [{}]", c.name, c.unit);
    width[i] = header[i].size();
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : r.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(std::holds_alternative<std::monostate>(row[i]) ? "-" : cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto print_line = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += fmt::format("{}{:>{}}", i ? "  " : "", line[i], width[i]);
    }
    out << text << '\n';
  };
  if (!r.columns.empty()) {
    print_line(header);
    for (const auto& line : cells) print_line(line);
  }
  if (!r.summary.empty()) {
    if (!r.columns.empty()) out << '\n';
    std::size_t label_width = 0;
    for (const auto& s : r.summary) label_width = std::max(label_width, s.label.size());
    for (const auto& s : r.summary) {
      fmt::print(out, "{:<{}}  {}{}\n", s.label, label_width, cell_text(s.value),
                 s.unit.empty() || s.unit == "1" ? "" : " " + s.unit);
    }
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw ArgumentError(fmt::format("unknown format '{}'", name));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  return fmt::format("{:.9g}", v);
}

void render(std::ostream& out, const OutputRecord& record, Format format) {
  switch (format) {
    case Format::csv: render_csv(out, record); break;
    case Format::json: render_json(out, record); break;
    case Format::text: render_text(out, record); break;
  }
}

}  // namespace gupent::cli
