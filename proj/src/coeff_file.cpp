#include "gupent/coeff_file.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "gupent/errors.hpp"

namespace gupent {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& text, int line) {
  double v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ArgumentError(fmt::format("coefficient file line {}: '{}' is not a number", line, text));
  }
  return v;
}

int to_int(const std::string& text, int line) {
  int v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ArgumentError(fmt::format("coefficient file line {}: '{}' is not an integer", line, text));
  }
  return v;
}

struct Kind {
  maxent::AnsatzKind kind;
  std::optional<double> q;
};

Kind parse_kind(const std::string& text, int line) {
  if (text == "plus") return {maxent::AnsatzKind::plus, {}};
  if (text == "minus") return {maxent::AnsatzKind::minus, {}};
  if (text == "custom") return {maxent::AnsatzKind::custom, {}};
  if (text.starts_with("tsallis(") && text.ends_with(")")) {
    return {maxent::AnsatzKind::tsallis, to_double(text.substr(8, text.size() - 9), line)};
  }
  throw ArgumentError(fmt::format("coefficient file line {}: unknown kind '{}'", line, text));
}

}  // namespace

void write_coeff_file(std::ostream& out, const CoeffFile& file) {
  const auto& c = file.coeffs;
  fmt::print(out, "kind = {}\n", maxent::kind_label(c));
  fmt::print(out, "degree = {}\n", c.degree());
  for (int j = 0; j <= c.degree(); ++j) fmt::print(out, "a{} = {:.17g}\n", j, c.a()[j]);
  if (file.residual) fmt::print(out, "residual = {:.17g}\n", *file.residual);
  if (file.grid) fmt::print(out, "grid = {}\n", *file.grid);
}

CoeffFile read_coeff_file(std::istream& in) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError(fmt::format("coefficient file line {}: expected 'key = value'", line));
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ArgumentError(fmt::format("coefficient file line {}: empty key or value", line));
    }
    if (!entries.emplace(key, std::make_pair(value, line)).second) {
      throw ArgumentError(fmt::format("coefficient file line {}: duplicate key '{}'", line, key));
    }
  }

  auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    auto v = it->second;
    entries.erase(it);
    return v;
  };
  auto require = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw ArgumentError(fmt::format("coefficient file: missing key '{}'", key));
    return *v;
  };

  const auto [kind_text, kind_line] = require("kind");
  const Kind kind = parse_kind(kind_text, kind_line);
  const auto [degree_text, degree_line] = require("degree");
  const int degree = to_int(degree_text, degree_line);
  if (degree < 0) throw ArgumentError("coefficient file: negative degree");

  std::vector<double> a;
  for (int j = 0; j <= degree; ++j) {
    const auto [v, l] = require(fmt::format("a{}", j));
    a.push_back(to_double(v, l));
  }

  std::optional<double> residual;
  if (auto r = take("residual")) residual = to_double(r->first, r->second);
  std::optional<std::string> grid;
  if (auto g = take("grid")) grid = g->first;

  if (!entries.empty()) {
    const auto& [key, where] = *entries.begin();
    throw ArgumentError(
        fmt::format("coefficient file line {}: unknown key '{}'", where.second, key));
  }
  return {maxent::AnsatzCoeffs(kind.kind, std::move(a), kind.q), residual, grid};
}

CoeffFile load_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError(fmt::format("cannot open coefficient file '{}'", path));
  return read_coeff_file(in);
}

void save_coeff_file(const std::string& path, const CoeffFile& file) {
  std::ofstream out(path);
  if (!out) throw ArgumentError(fmt::format("cannot write coefficient file '{}'", path));
  write_coeff_file(out, file);
  if (!out) throw ArgumentError(fmt::format("write to '{}' failed", path));
}

}  // namespace gupent
