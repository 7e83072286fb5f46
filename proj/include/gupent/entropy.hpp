#pragma once

// Discrete entropies with k_B = 1: Shannon, the parameter-free S+ / S-,
// Tsallis and Renyi, plus the generalized logarithms behind S+ and S-.

#include <span>
#include <vector>

namespace gupent::entropy {

/// Normalized probability vector: every entry in (0, 1], sum within 1e-12 of 1.
class ProbVector {
 public:
  /// Throws DomainError on an empty vector, an entry outside (0, 1], or a bad sum.
  explicit ProbVector(std::vector<double> probs);

  static ProbVector uniform(int omega);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

double shannon(const ProbVector& p);

/// sum_l (1 - p_l^{p_l})
double s_plus(const ProbVector& p);

/// sum_l (p_l^{-p_l} - 1)
double s_minus(const ProbVector& p);

/// -(1 - x^x) / x on (0, 1]
double log_plus(double x);

/// -(x^{-x} - 1) / x on (0, 1]
double log_minus(double x);

/// (1 - sum p^q) / (q - 1). q > 0, q != 1.
double tsallis(const ProbVector& p, double q);

/// ln(sum p^q) / (1 - q). q > 0, q != 1.
double renyi(const ProbVector& p, double q);

/// Partial sums of S+ and S- for omega equiprobable states written in powers of
/// the Shannon value S_B = ln omega:
///   S_B -/+ S_B^2 e^{-S_B} / 2! + S_B^3 e^{-2 S_B} / 3!
/// nterms in {1, 2, 3}; omega >= 2.
double s_plus_equiprob_expansion(int omega, int nterms);
double s_minus_equiprob_expansion(int omega, int nterms);

}  // namespace gupent::entropy
