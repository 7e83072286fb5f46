#pragma once

#include <string>
#include <vector>

namespace gupent {

/// Equally spaced grid "start:stop:count" (endpoints included).
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  /// Parses "start:stop:count"; count >= 1, start == stop only when count == 1.
  /// Throws ArgumentError on malformed input.
  static GridSpec parse(const std::string& text);

  std::vector<double> values() const;
  std::string to_string() const;
};

}  // namespace gupent
