#include "gupent/series.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "gupent/errors.hpp"

namespace gupent::series {

namespace {

void require_zero_constant(const Series& u, const char* op) {
  if (u.constant_term() != 0.0) {
    throw DomainError(fmt::format("{}: argument must have zero constant term (got {})",
                                  op, u.constant_term()));
  }
}

}  // namespace

Series::Series(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ArgumentError("Series: empty coefficient list");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw ArgumentError("Series: non-finite coefficient");
  }
}

Series Series::zero(int order) { return constant(0.0, order); }

Series Series::constant(double value, int order) {
  if (order < 0) throw ArgumentError("Series: negative order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = value;
  return Series(std::move(c));
}

Series Series::variable(int order) {
  if (order < 1) throw ArgumentError("Series::variable: order must be >= 1");
  Series s = zero(order);
  s.coeffs_[1] = 1.0;
  return s;
}

Series Series::padded(std::span<const double> coeffs, int order) {
  if (order < 0) throw ArgumentError("Series: negative order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  std::copy_n(coeffs.begin(), std::min(coeffs.size(), c.size()), c.begin());
  return Series(std::move(c));
}

int Series::valuation() const noexcept {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0.0) return static_cast<int>(j);
  }
  return order() + 1;
}

Series Series::truncated(int order) const {
  if (order < 0) throw ArgumentError("Series::truncated: negative order");
  if (order > this->order()) {
    throw ArgumentError(fmt::format("Series::truncated: cannot raise order {} to {}",
                                    this->order(), order));
  }
  return Series(std::vector<double>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

double Series::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Series Series::operator-() const { return -1.0 * *this; }

Series operator+(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[j] = a[j] + b[j];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (int i = 0; i <= n; ++i) {
    if (ac[i] == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += ac[i] * bc[j];
  }
  return Series(std::move(c));
}

Series operator*(double s, const Series& a) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (double& v : c) v *= s;
  return Series(std::move(c));
}

Series operator/(const Series& a, double s) {
  if (s == 0.0) throw DomainError("Series: division by zero");
  return (1.0 / s) * a;
}

Series operator+(const Series& a, double s) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  c[0] += s;
  return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) { return a * b; }

// With a = 1 + u and l = ln a: l' a = u', hence
//   n l_n = n u_n - sum_{k=1}^{n-1} k l_k u_{n-k}.
Series ln_one_plus(const Series& u) {
  require_zero_constant(u, "ln_one_plus");
  const int n = u.order();
  std::vector<double> l(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 1; m <= n; ++m) {
    double acc = m * u[m];
    for (int k = 1; k < m; ++k) acc -= k * l[k] * u[m - k];
    l[m] = acc / m;
  }
  return Series(std::move(l));
}

// e = exp(u): e' = u' e, hence n e_n = sum_{k=1}^{n} k u_k e_{n-k}.
Series exp_series(const Series& u) {
  require_zero_constant(u, "exp_series");
  const int n = u.order();
  std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
  e[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += k * u[k] * e[m - k];
    e[m] = acc / m;
  }
  return Series(std::move(e));
}

Series sqrt_series(const Series& a) {
  if (!(a.constant_term() > 0.0)) {
    throw DomainError(fmt::format("sqrt_series: constant term must be positive (got {})",
                                  a.constant_term()));
  }
  const int n = a.order();
  std::vector<double> s(static_cast<std::size_t>(n) + 1, 0.0);
  s[0] = std::sqrt(a[0]);
  for (int m = 1; m <= n; ++m) {
    double acc = a[m];
    for (int k = 1; k < m; ++k) acc -= s[k] * s[m - k];
    s[m] = acc / (2.0 * s[0]);
  }
  return Series(std::move(s));
}

Series compose(const Series& outer, const Series& inner) {
  require_zero_constant(inner, "compose");
  const int v = inner.valuation();
  int order = inner.order();
  if (v <= inner.order()) order = std::min(order, v * (outer.order() + 1) - 1);

  const Series in = inner.truncated(order);
  // Horner in the outer variable; the constant fix-up keeps every partial
  // result at the target order.
  Series acc = Series::constant(outer[outer.order()], order);
  for (int j = outer.order() - 1; j >= 0; --j) acc = acc * in + outer[j];
  return acc;
}

// t = tan x solves t' = 1 + t^2 with t(0) = 0:
//   (m + 1) t_{m+1} = [m = 0] + sum_{k=0}^{m} t_k t_{m-k}.
Series tan_series(int order) {
  if (order < 1) throw ArgumentError("tan_series: order must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(order) + 1, 0.0);
  for (int m = 0; m < order; ++m) {
    double acc = (m == 0) ? 1.0 : 0.0;
    for (int k = 0; k <= m; ++k) acc += t[k] * t[m - k];
    t[m + 1] = acc / (m + 1);
  }
  return Series(std::move(t));
}

Series arctan_series(int order) {
  if (order < 1) throw ArgumentError("arctan_series: order must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int j = 1; j <= order; j += 2) c[j] = ((j / 2) % 2 == 0 ? 1.0 : -1.0) / j;
  return Series(std::move(c));
}

}  // namespace gupent::series
