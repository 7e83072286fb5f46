#include "gupent/maxent.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <limits>
#include <numeric>

#include "gupent/errors.hpp"

namespace gupent::maxent {

AnsatzCoeffs::AnsatzCoeffs(AnsatzKind kind, std::vector<double> a, std::optional<double> q)
    : kind_(kind), a_(std::move(a)), q_(q) {
  if (a_.empty()) throw ArgumentError("AnsatzCoeffs: no coefficients");
  if (a_[0] != 1.0) {
    throw ArgumentError(fmt::format("AnsatzCoeffs: a0 must be 1, got {}", a_[0]));
  }
  for (double v : a_) {
    if (!std::isfinite(v)) throw ArgumentError("AnsatzCoeffs: non-finite coefficient");
  }
  if ((kind_ == AnsatzKind::tsallis) != q_.has_value()) {
    throw ArgumentError("AnsatzCoeffs: q is required for, and only for, the Tsallis kind");
  }
}

double AnsatzCoeffs::coeff(int j) const noexcept {
  return (j >= 0 && j < static_cast<int>(a_.size())) ? a_[j] : 0.0;
}

std::string kind_label(const AnsatzCoeffs& coeffs) {
  switch (coeffs.kind()) {
    case AnsatzKind::plus: return "plus";
    case AnsatzKind::minus: return "minus";
    case AnsatzKind::tsallis: return fmt::format("tsallis({})", *coeffs.q());
    case AnsatzKind::custom: return "custom";
  }
  return "custom";
}

AnsatzCoeffs table1_plus() {
  return AnsatzCoeffs(AnsatzKind::plus, {1.0, 0.000029, 0.747398, -1.205053, 1.284852});
}

AnsatzCoeffs table1_minus() {
  return AnsatzCoeffs(AnsatzKind::minus, {1.0, -0.333335, -0.586262, 0.851734, 0.893692});
}

double implicit_equation(Branch branch, double x, double p) {
  const double lnp = std::log(p);
  if (branch == Branch::plus) return 1.0 + lnp + x * (1.0 + p + p * lnp) - std::exp(-p * lnp);
  return 1.0 + lnp + x * (1.0 - p - p * lnp) - std::exp(p * lnp);
}

namespace {

constexpr double kLowerBracket = 1e-16;
constexpr int kMaxIterations = 400;

double implicit_derivative(Branch branch, double x, double p) {
  const double lnp = std::log(p);
  if (branch == Branch::plus) {
    return 1.0 / p + x * (2.0 + lnp) + std::exp(-p * lnp) * (1.0 + lnp);
  }
  return 1.0 / p - x * (2.0 + lnp) - std::exp(p * lnp) * (1.0 + lnp);
}

// Safeguarded Newton on a bracket with g(lo) < 0 < g(hi). Newton steps that
// leave the bracket are replaced by bisection (geometric while the bracket
// spans more than a factor of 4, since roots sit near e^{-x}).
MaxEntSolution bracketed_root(Branch branch, double x, double lo, double hi, double tol) {
  auto g = [&](double p) { return implicit_equation(branch, x, p); };
  double p = std::clamp(std::exp(-x), lo, hi);
  if (p <= lo || p >= hi) p = std::sqrt(lo * hi);

  double gp = g(p);
  for (int it = 0; it < kMaxIterations && gp != 0.0; ++it) {
    if (gp < 0.0) lo = p; else hi = p;

    const double d = implicit_derivative(branch, x, p);
    double next = p - gp / d;
    if (!std::isfinite(next) || next <= lo || next >= hi) {
      next = (hi > 4.0 * lo) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    }
    const bool tiny_step = std::abs(next - p) <= 2.0 * std::numeric_limits<double>::epsilon() * p;
    p = next;
    gp = g(p);
    if (tiny_step || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }

  const double residual = std::abs(gp);
  if (!(residual <= tol)) {
    throw NumericalError(
        fmt::format("maxent solver: residual {} above tol {} at x = {} (p = {})", residual, tol, x, p),
        p, residual);
  }
  return {x, p, residual};
}

void check_inputs(double x, double tol, const char* op) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(fmt::format("{}: x = beta E must be finite and >= 0, got {}", op, x));
  }
  if (!(tol > 0.0)) throw ArgumentError(fmt::format("{}: tol must be positive", op));
}

}  // namespace

MaxEntSolution solve_p_plus(double x, double tol) {
  check_inputs(x, tol, "solve_p_plus");
  if (x == 0.0) return {x, 1.0, 0.0};
  const double g_lo = implicit_equation(Branch::plus, x, kLowerBracket);
  const double g_hi = implicit_equation(Branch::plus, x, 1.0);
  if (!(g_lo < 0.0 && g_hi > 0.0)) {
    throw NumericalError(fmt::format(
        "solve_p_plus: no sign change on [{}, 1] at x = {} (g = {}, {})", kLowerBracket, x, g_lo,
        g_hi));
  }
  return bracketed_root(Branch::plus, x, kLowerBracket, 1.0, tol);
}

MaxEntSolution solve_p_minus(double x, double tol) {
  check_inputs(x, tol, "solve_p_minus");
  if (x == 0.0) return {x, 1.0, 0.0};

  // g(1) = 0 identically, with g'(1) = -2x, so g > 0 just below 1. Move the
  // upper end inward until it sees that positive side.
  double gap = std::min(0.5 * x, 0.5);
  double hi = 1.0 - gap;
  while (hi < 1.0 && !(implicit_equation(Branch::minus, x, hi) > 0.0)) {
    gap *= 0.5;
    hi = 1.0 - gap;
  }
  if (hi >= 1.0) {
    // Root closer to 1 than double resolution.
    return {x, 1.0, 0.0};
  }
  const double g_lo = implicit_equation(Branch::minus, x, kLowerBracket);
  if (!(g_lo < 0.0)) {
    throw NumericalError(fmt::format("solve_p_minus: no sign change on [{}, {}] at x = {} (g = {})",
                                     kLowerBracket, hi, x, g_lo));
  }
  return bracketed_root(Branch::minus, x, kLowerBracket, hi, tol);
}

MaxEntSolution solve(Branch branch, double x, double tol) {
  return branch == Branch::plus ? solve_p_plus(x, tol) : solve_p_minus(x, tol);
}

std::vector<MaxEntSolution> solve_grid(Branch branch, std::span<const double> xs, double tol) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  std::vector<MaxEntSolution> out(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = solve(branch, xs[i], tol);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<MaxEntSolution> solve_grid_serial(Branch branch, std::span<const double> xs,
                                              double tol) {
  std::vector<MaxEntSolution> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(solve(branch, x, tol));
  return out;
}

double gen_exp_eval(const AnsatzCoeffs& coeffs, double x) {
  if (!(x >= 0.0)) throw DomainError(fmt::format("gen_exp_eval: x = {} < 0", x));
  const auto a = coeffs.a();
  double poly = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) poly = poly * x + *it;
  return std::exp(-x) * poly;
}

FitResult fit_ansatz(AnsatzKind kind, int degree, std::span<const double> xs,
                     std::span<const double> values) {
  if (degree < 1) throw ArgumentError("fit_ansatz: degree must be >= 1");
  if (xs.size() != values.size()) throw ArgumentError("fit_ansatz: size mismatch");
  const auto n = static_cast<Eigen::Index>(xs.size());
  if (n < degree) throw NumericalError("fit_ansatz: fewer points than unknowns");

  // a_0 = 1 is pinned, so fit (value - e^{-x}) against e^{-x} x^j, j >= 1.
  Eigen::MatrixXd design(n, degree);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = std::exp(-xs[i]);
    double xp = 1.0;
    for (int j = 0; j < degree; ++j) {
      xp *= xs[i];
      design(i, j) = w * xp;
    }
    rhs(i) = values[i] - w;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < degree) {
    throw NumericalError(
        fmt::format("fit_ansatz: rank-deficient design (rank {} < {})", qr.rank(), degree));
  }
  const Eigen::VectorXd sol = qr.solve(rhs);
  const double rms = std::sqrt((design * sol - rhs).squaredNorm() / static_cast<double>(n));

  std::vector<double> a(static_cast<std::size_t>(degree) + 1);
  a[0] = 1.0;
  for (int j = 0; j < degree; ++j) a[j + 1] = sol(j);
  return {AnsatzCoeffs(kind, std::move(a)), rms};
}

FitResult fit_gen_exp(Branch branch, int degree, std::span<const double> grid, double tol) {
  if (degree < 2) throw ArgumentError(fmt::format("fit_gen_exp: degree must be >= 2, got {}", degree));
  std::vector<double> sorted(grid.begin(), grid.end());
  for (double x : sorted) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ArgumentError(fmt::format("fit_gen_exp: grid point {} is not a finite x >= 0", x));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  if (distinct < degree + 1) {
    throw ArgumentError(fmt::format("fit_gen_exp: need >= {} distinct grid points, got {}",
                                    degree + 1, distinct));
  }

  const auto solutions = solve_grid(branch, grid, tol);
  std::vector<double> ps(solutions.size());
  std::transform(solutions.begin(), solutions.end(), ps.begin(),
                 [](const MaxEntSolution& s) { return s.p; });
  const auto kind = branch == Branch::plus ? AnsatzKind::plus : AnsatzKind::minus;
  return fit_ansatz(kind, degree, grid, ps);
}

entropy::ProbVector maxent_distribution(std::span<const double> energies, double beta,
                                        Statistics kind, double tol) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError(fmt::format("maxent_distribution: beta = {} must be finite and >= 0", beta));
  }
  if (energies.empty()) throw DomainError("maxent_distribution: no energy levels");
  for (double e : energies) {
    if (!std::isfinite(e)) throw DomainError("maxent_distribution: non-finite energy");
  }

  std::vector<double> weights(energies.size());
  if (kind == Statistics::boltzmann) {
    // Shift by the ground level before exponentiating.
    const double e0 = *std::min_element(energies.begin(), energies.end());
    for (std::size_t i = 0; i < energies.size(); ++i) {
      weights[i] = std::exp(-beta * (energies[i] - e0));
    }
  } else {
    const Branch branch = kind == Statistics::plus ? Branch::plus : Branch::minus;
    for (std::size_t i = 0; i < energies.size(); ++i) {
      weights[i] = solve(branch, beta * energies[i], tol).p;
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return entropy::ProbVector(std::move(weights));
}

}  // namespace gupent::maxent
