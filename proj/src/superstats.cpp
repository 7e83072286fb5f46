#include "gupent/superstats.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <exception>
#include <fmt/format.h>

#include "gupent/errors.hpp"
#include "gupent/quadrature.hpp"
#include "gupent/series.hpp"

namespace gupent::superstats {

GammaBetaParams::GammaBetaParams(double p, double beta0) : p_(p), beta0_(beta0) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError(fmt::format("GammaBetaParams: p must lie in (0, 1], got {}", p));
  }
  if (!(beta0 > 0.0) || !std::isfinite(beta0)) {
    throw DomainError(fmt::format("GammaBetaParams: beta0 must be positive, got {}", beta0));
  }
}

double gamma_function(double x) { return boost::math::tgamma(x); }

double gamma_pdf(const GammaBetaParams& params, double beta) {
  if (!(beta >= 0.0)) throw DomainError(fmt::format("gamma_pdf: beta = {} < 0", beta));
  const double k = params.shape();
  const double theta = params.scale();
  if (beta == 0.0) return k == 1.0 ? 1.0 / theta : 0.0;
  const double t = beta / theta;
  return std::exp((k - 1.0) * std::log(t) - t - boost::math::lgamma(k)) / theta;
}

double boltzmann_closed(const GammaBetaParams& params, double energy) {
  if (!(energy >= 0.0)) {
    throw DomainError(fmt::format("boltzmann_closed: energy = {} < 0", energy));
  }
  const double p = params.p();
  return std::exp(-std::log1p(p * params.beta0() * energy) / p);
}

double boltzmann_quadrature(const GammaBetaParams& params, double energy, double tol) {
  if (!(energy >= 0.0)) {
    throw DomainError(fmt::format("boltzmann_quadrature: energy = {} < 0", energy));
  }
  if (!(tol > 0.0)) throw ArgumentError("boltzmann_quadrature: tol must be positive");

  // t = beta / (p beta0) turns the average into
  //   int_0^inf t^{k-1} e^{-lambda t} dt / Gamma(k),  k = 1/p, lambda = 1 + p beta0 E.
  const double k = params.shape();
  const double lambda = 1.0 + params.p() * params.beta0() * energy;
  const double log_norm = boost::math::lgamma(k);
  auto integrand = [=](double t) {
    if (t <= 0.0) return k == 1.0 ? 1.0 : 0.0;
    return std::exp((k - 1.0) * std::log(t) - lambda * t - log_norm);
  };

  // Cut both tails where their share of the integral is below tol/20 each.
  const double tail = tol / 20.0;
  const double lo = boost::math::gamma_p_inv(k, tail) / lambda;
  const double hi = boost::math::gamma_q_inv(k, tail) / lambda;

  const auto result = quadrature::integrate(integrand, lo, hi, 0.0, tol / 4.0);
  const double value = result.value;
  const double err = result.abs_error + 2.0 * tail * std::abs(value);
  if (!result.converged || !std::isfinite(value) || err > tol * std::abs(value)) {
    throw NumericalError(
        fmt::format("boltzmann_quadrature: did not converge to tol {} (estimate {}, error {})",
                    tol, value, err),
        value, err);
  }
  return value;
}

double boltzmann_series(const GammaBetaParams& params, double energy, int order) {
  if (order < 0 || order > 2) {
    throw ArgumentError(fmt::format("boltzmann_series: order must be 0, 1 or 2, got {}", order));
  }
  if (!(energy >= 0.0)) {
    throw DomainError(fmt::format("boltzmann_series: energy = {} < 0", energy));
  }
  // ln B + beta0 E = sum_{n>=1} (-1)^{n+1} (beta0 E)^{n+1} p^n / (n+1); expand
  // exp of that in p and truncate.
  const double x = params.beta0() * energy;
  std::vector<double> exponent(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    exponent[n] = ((n % 2 == 1) ? 1.0 : -1.0) * std::pow(x, n + 1) / (n + 1);
  }
  const auto bracket = series::exp_series(series::Series(std::move(exponent)));
  return std::exp(-x) * bracket.evaluate(params.p());
}

namespace {

BoltzmannRow evaluate_row(double p, double x, double beta0, double tol) {
  const GammaBetaParams params(p, beta0);
  const double energy = x / beta0;
  BoltzmannRow row{};
  row.p = p;
  row.beta0_energy = x;
  row.closed = boltzmann_closed(params, energy);
  row.quadrature = boltzmann_quadrature(params, energy, tol);
  row.series2 = boltzmann_series(params, energy, 2);
  row.abs_diff = std::abs(row.closed - row.quadrature);
  return row;
}

}  // namespace

std::vector<BoltzmannRow> boltzmann_table(std::span<const double> ps,
                                          std::span<const double> beta0_energies,
                                          double beta0, double tol) {
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(beta0_energies.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ps.size()) * nx;
  std::vector<BoltzmannRow> rows(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = evaluate_row(ps[i / nx], beta0_energies[i % nx], beta0, tol);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<BoltzmannRow> boltzmann_table_serial(std::span<const double> ps,
                                                 std::span<const double> beta0_energies,
                                                 double beta0, double tol) {
  std::vector<BoltzmannRow> rows;
  rows.reserve(ps.size() * beta0_energies.size());
  for (double p : ps) {
    for (double x : beta0_energies) rows.push_back(evaluate_row(p, x, beta0, tol));
  }
  return rows;
}

}  // namespace gupent::superstats
