#pragma once

// Superstatistics with a Gamma-distributed inverse temperature.
//
// The density of beta has shape 1/p and scale p * beta0, so its mean is beta0
// and its variance p * beta0^2. Averaging exp(-beta E) over it gives the
// effective Boltzmann factor (1 + p beta0 E)^(-1/p).

#include <span>
#include <vector>

namespace gupent::superstats {

/// Parameters of the inverse-temperature distribution. Construction validates
/// 0 < p <= 1 and beta0 > 0 (DomainError otherwise).
class GammaBetaParams {
 public:
  GammaBetaParams(double p, double beta0);

  double p() const noexcept { return p_; }
  double beta0() const noexcept { return beta0_; }
  double shape() const noexcept { return 1.0 / p_; }
  double scale() const noexcept { return p_ * beta0_; }

 private:
  double p_;
  double beta0_;
};

/// Gamma function (Lanczos approximation).
double gamma_function(double x);

double gamma_pdf(const GammaBetaParams& params, double beta);

/// (1 + p beta0 E)^(-1/p), E >= 0.
double boltzmann_closed(const GammaBetaParams& params, double energy);

/// Adaptive Gauss-Kronrod evaluation of the beta average of exp(-beta E).
/// Throws NumericalError (carrying the achieved estimate) when the error
/// estimate stays above tol relative to the result.
double boltzmann_quadrature(const GammaBetaParams& params, double energy,
                            double tol);

/// Small-p expansion of the effective factor, truncated at p^order,
/// order in {0, 1, 2}. Accurate while p beta0^2 E^2 < 1.
double boltzmann_series(const GammaBetaParams& params, double energy, int order);

struct BoltzmannRow {
  double p;
  double beta0_energy;
  double closed;
  double quadrature;
  double series2;
  double abs_diff;
};

/// Evaluates every (p, beta0 E) pair with beta0 fixed. Rows are ordered
/// p-major. The parallel and serial variants produce identical rows.
std::vector<BoltzmannRow> boltzmann_table(std::span<const double> ps,
                                          std::span<const double> beta0_energies,
                                          double beta0, double tol);
std::vector<BoltzmannRow> boltzmann_table_serial(std::span<const double> ps,
                                                 std::span<const double> beta0_energies,
                                                 double beta0, double tol);

}  // namespace gupent::superstats
