#pragma once

// Plain-text Ansatz coefficient files, one `key = value` per line:
//
//   kind = minus
//   degree = 4
//   a0 = 1
//   a1 = -0.33...
//   ...
//   residual = 1.1e-05
//   grid = 0:0.5:301
//
// kind, degree and a0..a<degree> are required; residual and grid are optional.
// Blank lines and lines starting with '#' are ignored. Any other key, a
// duplicated key, or a coefficient index above `degree` is an error.

#include <iosfwd>
#include <optional>
#include <string>

#include "gupent/maxent.hpp"

namespace gupent {

struct CoeffFile {
  maxent::AnsatzCoeffs coeffs;
  std::optional<double> residual;
  std::optional<std::string> grid;
};

/// Coefficients are written with 17 significant digits so reading back is exact.
void write_coeff_file(std::ostream& out, const CoeffFile& file);

/// Throws ArgumentError with the offending line number on malformed input.
CoeffFile read_coeff_file(std::istream& in);

CoeffFile load_coeff_file(const std::string& path);
void save_coeff_file(const std::string& path, const CoeffFile& file);

}  // namespace gupent
