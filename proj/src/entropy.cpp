#include "gupent/entropy.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "gupent/errors.hpp"

namespace gupent::entropy {

namespace {

constexpr double kSumTolerance = 1e-12;

void check_q(double q, const char* op) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw ArgumentError(fmt::format("{}: q must be positive, got {}", op, q));
  }
  if (q == 1.0) throw ArgumentError(fmt::format("{}: q = 1 is the Shannon limit", op));
}

double power_sum(const ProbVector& p, double q) {
  double acc = 0.0;
  for (double v : p.probs()) acc += std::pow(v, q);
  return acc;
}

void check_unit_interval(double x, const char* op) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError(fmt::format("{}: argument must lie in (0, 1], got {}", op, x));
  }
}

double equiprob_expansion(int omega, int nterms, double sign) {
  if (omega < 2) throw ArgumentError(fmt::format("equiprobable expansion: omega = {} < 2", omega));
  if (nterms < 1 || nterms > 3) {
    throw ArgumentError(fmt::format("equiprobable expansion: nterms must be 1..3, got {}", nterms));
  }
  const double sb = std::log(static_cast<double>(omega));
  double sum = sb;
  if (nterms >= 2) sum += sign * sb * sb * std::exp(-sb) / 2.0;
  if (nterms >= 3) sum += sb * sb * sb * std::exp(-2.0 * sb) / 6.0;
  return sum;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("ProbVector: empty");
  for (double v : probs_) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw DomainError(fmt::format("ProbVector: entry {} outside (0, 1]", v));
    }
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw DomainError(fmt::format("ProbVector: entries sum to {:.17g}, not 1", total));
  }
}

ProbVector ProbVector::uniform(int omega) {
  if (omega < 1) throw DomainError("ProbVector::uniform: omega must be >= 1");
  return ProbVector(std::vector<double>(static_cast<std::size_t>(omega), 1.0 / omega));
}

double shannon(const ProbVector& p) {
  double acc = 0.0;
  for (double v : p.probs()) acc -= v * std::log(v);
  return acc;
}

// 1 - x^x = -expm1(x ln x); keeps precision for x near 0 and 1.
double s_plus(const ProbVector& p) {
  double acc = 0.0;
  for (double v : p.probs()) acc -= std::expm1(v * std::log(v));
  return acc;
}

double s_minus(const ProbVector& p) {
  double acc = 0.0;
  for (double v : p.probs()) acc += std::expm1(-v * std::log(v));
  return acc;
}

double log_plus(double x) {
  check_unit_interval(x, "log_plus");
  return std::expm1(x * std::log(x)) / x;
}

double log_minus(double x) {
  check_unit_interval(x, "log_minus");
  return -std::expm1(-x * std::log(x)) / x;
}

double tsallis(const ProbVector& p, double q) {
  check_q(q, "tsallis");
  return (1.0 - power_sum(p, q)) / (q - 1.0);
}

double renyi(const ProbVector& p, double q) {
  check_q(q, "renyi");
  return std::log(power_sum(p, q)) / (1.0 - q);
}

double s_plus_equiprob_expansion(int omega, int nterms) {
  return equiprob_expansion(omega, nterms, -1.0);
}

double s_minus_equiprob_expansion(int omega, int nterms) {
  return equiprob_expansion(omega, nterms, +1.0);
}

}  // namespace gupent::entropy
