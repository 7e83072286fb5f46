#pragma once

// Truncated univariate power series with double coefficients.
//
// A Series of order N stores c_0..c_N and stands for c_0 + c_1 x + ... + c_N x^N
// + O(x^{N+1}). Binary operations truncate to the smaller operand order, so a
// result never claims more coefficients than both inputs actually determine.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gupent::series {

inline constexpr int kDefaultOrder = 8;

class Series {
 public:
  /// Order-0 zero series.
  Series() : coeffs_{0.0} {}
  /// Coefficients c_0..c_N; order is coeffs.size() - 1. Throws ArgumentError
  /// on an empty or non-finite coefficient list.
  explicit Series(std::vector<double> coeffs);
  Series(std::initializer_list<double> coeffs)
      : Series(std::vector<double>(coeffs)) {}

  static Series zero(int order);
  static Series constant(double value, int order);
  /// The series x at the given order (order >= 1).
  static Series variable(int order);

  /// Copy of `coeffs` extended with explicit zeros up to `order`, or truncated.
  /// Use only when the missing coefficients are known to vanish.
  static Series padded(std::span<const double> coeffs, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  double constant_term() const noexcept { return coeffs_.front(); }

  /// Index of the first nonzero coefficient, or order() + 1 for the zero series.
  int valuation() const noexcept;

  Series truncated(int order) const;
  double evaluate(double x) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(double s, const Series& a);
  friend Series operator*(const Series& a, double s) { return s * a; }
  friend Series operator/(const Series& a, double s);
  friend Series operator+(const Series& a, double s);
  friend Series operator-(const Series& a, double s) { return a + (-s); }

  bool operator==(const Series&) const = default;

 private:
  std::vector<double> coeffs_;
};

Series mul(const Series& a, const Series& b);

/// ln(1 + u); u must have zero constant term.
Series ln_one_plus(const Series& u);

/// exp(u); u must have zero constant term.
Series exp_series(const Series& u);

/// Principal square root; constant term must be strictly positive.
Series sqrt_series(const Series& a);

/// outer(inner(x)). inner must have zero constant term.
///
/// The result order is the number of coefficients that are fully determined:
/// with v the valuation of inner, outer's truncation only affects x^{v(N_o+1)}
/// and beyond, so the order is min(N_i, v (N_o + 1) - 1). For v = 1 that is the
/// usual min(N_o, N_i).
Series compose(const Series& outer, const Series& inner);

/// Maclaurin series of tan(x) to the given order (>= 1).
Series tan_series(int order);

/// Maclaurin series of arctan(x) to the given order (>= 1).
Series arctan_series(int order);

}  // namespace gupent::series
