#pragma once

// Maximum-entropy probabilities for the S+ / S- functionals and the
// generalized-exponential Ansatz exp_pm(-x) = e^{-x} sum_j a_j x^j fitted to them.
//
// For x = beta E_l the stationarity conditions read
//   S+ : 1 + ln p + x (1 + p + p ln p) - p^{-p} = 0
//   S- : 1 + ln p + x (1 - p - p ln p) - p^{p}  = 0
// The S- equation is satisfied by p = 1 for every x; the physical root is the
// other one, which tends to 1 only as x -> 0.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gupent/entropy.hpp"

namespace gupent::maxent {

enum class Branch { plus, minus };

enum class AnsatzKind { plus, minus, tsallis, custom };

/// Coefficients a_0..a_J of the Ansatz. a_0 must be exactly 1; coefficients
/// beyond J are zero.
class AnsatzCoeffs {
 public:
  /// Throws ArgumentError when `a` is empty, a_0 != 1, a coefficient is not
  /// finite, or a q is given for a non-Tsallis kind (and missing for Tsallis).
  AnsatzCoeffs(AnsatzKind kind, std::vector<double> a, std::optional<double> q = {});

  AnsatzKind kind() const noexcept { return kind_; }
  std::optional<double> q() const noexcept { return q_; }
  std::span<const double> a() const noexcept { return a_; }
  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
  /// a_j, zero past the stored degree.
  double coeff(int j) const noexcept;

 private:
  AnsatzKind kind_;
  std::vector<double> a_;
  std::optional<double> q_;
};

/// "plus", "minus", "tsallis(q)" or "custom".
std::string kind_label(const AnsatzCoeffs& coeffs);

/// Published coefficient table (degree 4) for the two entropies.
AnsatzCoeffs table1_plus();
AnsatzCoeffs table1_minus();

struct MaxEntSolution {
  double x;         ///< beta * E_l
  double p;         ///< root in (0, 1]
  double residual;  ///< |g(p)|
};

/// Left-hand side g(p) of the implicit equation; exposed for tests and checks.
double implicit_equation(Branch branch, double x, double p);

/// Root of the S+ equation in (1e-16, 1]. x >= 0, tol > 0. Throws
/// NumericalError when the bracket holds no sign change (x above ~36) or the
/// residual cannot be brought below tol.
MaxEntSolution solve_p_plus(double x, double tol);
/// Non-trivial root of the S- equation; p = 1 only at x = 0.
MaxEntSolution solve_p_minus(double x, double tol);
MaxEntSolution solve(Branch branch, double x, double tol);

/// Solves every grid point (OpenMP). Output order matches `xs`; identical to
/// the serial variant.
std::vector<MaxEntSolution> solve_grid(Branch branch, std::span<const double> xs, double tol);
std::vector<MaxEntSolution> solve_grid_serial(Branch branch, std::span<const double> xs,
                                              double tol);

double gen_exp_eval(const AnsatzCoeffs& coeffs, double x);

struct FitResult {
  AnsatzCoeffs coeffs;
  double rms_residual;
};

/// Least-squares fit of e^{-x} (1 + sum_{j=1}^{degree} a_j x^j) to (xs, values).
/// Throws NumericalError for rank-deficient designs.
FitResult fit_ansatz(AnsatzKind kind, int degree, std::span<const double> xs,
                     std::span<const double> values);

/// Solves the implicit equation on `grid` then fits the Ansatz.
/// degree >= 2; grid needs >= degree + 1 distinct non-negative points.
FitResult fit_gen_exp(Branch branch, int degree, std::span<const double> grid, double tol);

/// Default fit grid x in [0, 0.5], 301 points.
inline constexpr double kDefaultFitStart = 0.0;
inline constexpr double kDefaultFitStop = 0.5;
inline constexpr int kDefaultFitCount = 301;
inline constexpr int kDefaultFitDegree = 4;
inline constexpr double kDefaultSolverTol = 1e-12;

enum class Statistics { plus, minus, boltzmann };

/// Probabilities of each energy level at inverse temperature beta, rescaled to
/// sum to one.
entropy::ProbVector maxent_distribution(std::span<const double> energies, double beta,
                                        Statistics kind, double tol = kDefaultSolverTol);

}  // namespace gupent::maxent
