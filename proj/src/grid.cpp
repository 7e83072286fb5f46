#include "gupent/grid.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <string_view>

#include "gupent/errors.hpp"

namespace gupent {

namespace {

template <class T>
T parse_number(std::string_view text, const std::string& whole) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ArgumentError(fmt::format("grid '{}': cannot parse '{}'", whole, text));
  }
  return value;
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ArgumentError(fmt::format("grid '{}': expected start:stop:count", text));
  }
  const std::string_view view(text);
  GridSpec g;
  g.start = parse_number<double>(view.substr(0, first), text);
  g.stop = parse_number<double>(view.substr(first + 1, second - first - 1), text);
  g.count = parse_number<int>(view.substr(second + 1), text);
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) {
    throw ArgumentError(fmt::format("grid '{}': endpoints must be finite", text));
  }
  if (g.count < 1) throw ArgumentError(fmt::format("grid '{}': count must be >= 1", text));
  if (g.count > 1 && g.start == g.stop) {
    throw ArgumentError(fmt::format("grid '{}': repeated points", text));
  }
  return g;
}

std::vector<double> GridSpec::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = start;
    return v;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) v[i] = start + i * step;
  v.back() = stop;
  return v;
}

std::string GridSpec::to_string() const { return fmt::format("{}:{}:{}", start, stop, count); }

}  // namespace gupent
