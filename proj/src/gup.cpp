#include "gupent/gup.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "gupent/errors.hpp"

namespace gupent::gup {

using series::Series;

namespace {

constexpr double kSmallAlpha = 1e-12;

}  // namespace

GupParams::GupParams(double alpha0, double m_pl) : alpha0_(alpha0), m_pl_(m_pl) {
  if (!std::isfinite(alpha0)) throw DomainError("GupParams: alpha0 must be finite");
  if (!(m_pl > 0.0) || !std::isfinite(m_pl)) {
    throw DomainError(fmt::format("GupParams: m_pl must be positive, got {}", m_pl));
  }
}

Series effective_hamiltonian_series(const maxent::AnsatzCoeffs& coeffs, int order) {
  if (order < 4 || order % 2 != 0) {
    throw ArgumentError(fmt::format("effective_hamiltonian_series: order must be even and >= 4, got {}",
                                    order));
  }
  // Work in y = H first: H_eff(y) = y - ln(sum_j a_j y^j), then substitute y = k^2/2.
  const int y_order = order / 2;
  const Series ansatz = Series::padded(coeffs.a(), y_order);
  const Series in_y = Series::variable(y_order) - series::ln_one_plus(ansatz - 1.0);

  std::vector<double> half_k2(static_cast<std::size_t>(order) + 1, 0.0);
  half_k2[2] = 0.5;
  return series::compose(in_y, Series(std::move(half_k2)));
}

Series effective_momentum_series(const Series& h) {
  const int n = h.order();
  if (n < 2) throw DomainError("effective_momentum_series: need at least the k^2 term");
  if (h[0] != 0.0) throw DomainError("effective_momentum_series: nonzero constant term");
  for (int j = 1; j <= n; j += 2) {
    if (h[j] != 0.0) throw DomainError("effective_momentum_series: Hamiltonian is not even in k");
  }
  if (!(h[2] > 0.0)) {
    throw DomainError(fmt::format(
        "effective_momentum_series: k^2 coefficient {} must be positive (a1 >= 1?)", h[2]));
  }
  // 2h = k^2 (2 h_2 + 2 h_3 k + ...), so sqrt(2h) = k sqrt(2 h_2 + ...).
  std::vector<double> reduced(h.coeffs().begin() + 2, h.coeffs().end());
  for (double& c : reduced) c *= 2.0;
  const Series root = series::sqrt_series(Series(std::move(reduced)));

  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j <= root.order(); ++j) p[j + 1] = root[j];
  return Series(std::move(p));
}

Series normalize_momentum(const Series& p) {
  if (p.order() < 1 || p[1] == 0.0) {
    throw DomainError("normalize_momentum: linear coefficient must be nonzero");
  }
  return p / p[1];
}

double deformation_closed(double a1, double a2) {
  if (a1 == 1.0) throw DomainError("deformation_closed: a1 = 1 leaves no k^2 term");
  return 3.0 * (a1 * a1 - 2.0 * a2) / (8.0 * (1.0 - a1));
}

PipelineReport deformation_pipeline(const maxent::AnsatzCoeffs& coeffs, int order) {
  if (!(coeffs.coeff(1) < 1.0)) {
    throw DomainError(fmt::format("deformation_pipeline: requires a1 < 1, got {}", coeffs.coeff(1)));
  }
  Series h = effective_hamiltonian_series(coeffs, order);
  Series p = effective_momentum_series(h);
  Series normalized = normalize_momentum(p);
  const double pipeline = 3.0 * normalized[3];
  const double closed = deformation_closed(coeffs.coeff(1), coeffs.coeff(2));
  return {coeffs,   std::move(h), std::move(p), std::move(normalized),
          pipeline, closed,       std::abs(pipeline - closed)};
}

maxent::AnsatzCoeffs tsallis_coeffs(double q, int order) {
  if (order < 2) throw ArgumentError(fmt::format("tsallis_coeffs: order must be >= 2, got {}", order));
  if (!std::isfinite(q)) throw ArgumentError("tsallis_coeffs: q must be finite");
  std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
  a[0] = 1.0;
  if (q != 1.0) {
    // ln of the q-exponential: ln(1 - (1-q) x) / (1-q); adding x removes the
    // e^{-x} factor, and exp of the remainder gives sum_j a_j x^j.
    const double d = 1.0 - q;
    const Series x = Series::variable(order);
    const Series log_qexp = series::ln_one_plus(-d * x) / d;
    const Series rest = series::exp_series(log_qexp + x);
    for (int j = 1; j <= order; ++j) a[j] = rest[j];
  }
  return maxent::AnsatzCoeffs(maxent::AnsatzKind::tsallis, std::move(a), q);
}

double p_of_k(const GupParams& params, double k) {
  const double alpha = params.alpha();
  if (alpha > 0.0) {
    const double s = std::sqrt(alpha);
    if (s * std::abs(k) >= std::numbers::pi / 2.0) {
      throw DomainError(fmt::format("p_of_k: sqrt(alpha) |k| = {} reaches pi/2", s * std::abs(k)));
    }
    if (alpha < kSmallAlpha && s * std::abs(k) < 1e-3) {
      const double k2 = k * k;
      return k * (1.0 + alpha * k2 / 3.0 + 2.0 * alpha * alpha * k2 * k2 / 15.0);
    }
    return std::tan(s * k) / s;
  }
  if (alpha < 0.0) {
    const double s = std::sqrt(-alpha);
    if (-alpha < kSmallAlpha && s * std::abs(k) < 1e-3) {
      const double k2 = k * k;
      return k * (1.0 + alpha * k2 / 3.0 + 2.0 * alpha * alpha * k2 * k2 / 15.0);
    }
    return std::tanh(s * k) / s;
  }
  return k;
}

double k_of_p(const GupParams& params, double p) {
  const double alpha = params.alpha();
  if (alpha == 0.0) return p;
  const double s = std::sqrt(std::abs(alpha));
  if (alpha < 0.0 && s * std::abs(p) >= 1.0) {
    throw DomainError(fmt::format("k_of_p: |p| = {} reaches the momentum cap {}", std::abs(p), 1.0 / s));
  }
  if (std::abs(alpha) < kSmallAlpha && s * std::abs(p) < 1e-3) {
    const double p2 = p * p;
    return p * (1.0 - alpha * p2 / 3.0 + alpha * alpha * p2 * p2 / 5.0);
  }
  return alpha > 0.0 ? std::atan(s * p) / s : std::atanh(s * p) / s;
}

double commutator_rhs(const GupParams& params, double p) { return 1.0 + params.alpha() * p * p; }

double uncertainty_lower_bound(const GupParams& params, double dp) {
  if (!(dp > 0.0)) throw DomainError(fmt::format("uncertainty_lower_bound: dp = {} must be > 0", dp));
  const double alpha = params.alpha();
  if (alpha < 0.0 && dp * std::sqrt(-alpha) >= 1.0) {
    throw DomainError(fmt::format("uncertainty_lower_bound: dp = {} is not below the momentum cap {}",
                                  dp, 1.0 / std::sqrt(-alpha)));
  }
  return (1.0 + alpha * dp * dp) / (2.0 * dp);
}

RegimeSummary regime_summary(const GupParams& params) {
  const double alpha = params.alpha();
  if (alpha > 0.0) return {Regime::minimal_length, std::sqrt(alpha), std::nullopt};
  if (alpha < 0.0) return {Regime::max_momentum, std::nullopt, 1.0 / std::sqrt(-alpha)};
  return {Regime::heisenberg, std::nullopt, std::nullopt};
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::heisenberg: return "heisenberg";
    case Regime::minimal_length: return "minimal_length";
    case Regime::max_momentum: return "max_momentum";
  }
  return "heisenberg";
}

}  // namespace gupent::gup
