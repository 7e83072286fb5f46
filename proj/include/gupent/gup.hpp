#pragma once

// Deformed commutator [x, p] = i (1 + alpha p^2) obtained from an Ansatz
// P = exp(-H_eff) = e^{-H} sum_j a_j H^j with H = k^2 / 2 (Planck units), and
// the phenomenology of the resulting deformation parameter.
//
// Pipeline: H_eff(k) = H - ln(sum_j a_j H^j)  ->  p(k) = sqrt(2 H_eff)
//           -> divide by the linear coefficient -> p = k + (alpha0 / 3) k^3 + ...

#include <optional>

#include "gupent/maxent.hpp"
#include "gupent/series.hpp"

namespace gupent::gup {

/// alpha = alpha0 / m_pl^2; m_pl > 0, alpha0 finite (either sign).
class GupParams {
 public:
  GupParams(double alpha0, double m_pl = 1.0);

  double alpha0() const noexcept { return alpha0_; }
  double m_pl() const noexcept { return m_pl_; }
  double alpha() const noexcept { return alpha0_ / (m_pl_ * m_pl_); }

 private:
  double alpha0_;
  double m_pl_;
};

/// Effective Hamiltonian as a series in k. order even, >= 4.
series::Series effective_hamiltonian_series(const maxent::AnsatzCoeffs& coeffs,
                                            int order = series::kDefaultOrder);

/// sqrt(2 h) for an even h with zero constant and positive k^2 coefficient.
/// The result is odd with order h.order() - 1.
series::Series effective_momentum_series(const series::Series& h);

/// Divides by the linear coefficient so the result reads k + c3 k^3 + ...
series::Series normalize_momentum(const series::Series& p);

/// 3 (a1^2 - 2 a2) / (8 (1 - a1)).
double deformation_closed(double a1, double a2);

struct PipelineReport {
  maxent::AnsatzCoeffs coeffs;
  series::Series hamiltonian;
  series::Series momentum;
  series::Series normalized_momentum;
  double alpha0_pipeline;
  double alpha0_closed;
  double discrepancy;
};

inline constexpr double kPipelineTolerance = 1e-9;

/// Requires a1 < 1. Runs the series chain and compares against the closed form.
PipelineReport deformation_pipeline(const maxent::AnsatzCoeffs& coeffs,
                                    int order = series::kDefaultOrder);

/// Expansion of the q-exponential (1 - (1-q) x)^{1/(1-q)} as e^{-x} sum_j a_j x^j
/// up to x^order (order >= 2). q = 1 gives (1, 0, 0, ...).
maxent::AnsatzCoeffs tsallis_coeffs(double q, int order = 4);

/// High-energy momentum p(k): tan(sqrt(a) k)/sqrt(a) for alpha > 0, the tanh
/// continuation for alpha < 0. Throws DomainError when sqrt(alpha) |k| >= pi/2.
double p_of_k(const GupParams& params, double k);

/// Inverse of p_of_k: atan / atanh branches. Throws DomainError for
/// |p| >= 1/sqrt(-alpha) when alpha < 0.
double k_of_p(const GupParams& params, double p);

/// 1 + alpha p^2.
double commutator_rhs(const GupParams& params, double p);

/// (1 + alpha dp^2) / (2 dp), dp > 0. For alpha < 0 requires dp < 1/sqrt(-alpha).
double uncertainty_lower_bound(const GupParams& params, double dp);

enum class Regime { heisenberg, minimal_length, max_momentum };

struct RegimeSummary {
  Regime regime;
  std::optional<double> minimal_length;  ///< sqrt(alpha), alpha > 0
  std::optional<double> max_momentum;    ///< 1/sqrt(-alpha), alpha < 0
};

RegimeSummary regime_summary(const GupParams& params);

const char* regime_name(Regime r);

}  // namespace gupent::gup
