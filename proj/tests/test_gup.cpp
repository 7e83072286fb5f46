#include <doctest.h>

#include <cmath>
#include <vector>

#include "gupent/errors.hpp"
#include "gupent/gup.hpp"
#include "gupent/series.hpp"
#include "test_util.hpp"

using namespace gupent::gup;
using gupent::maxent::AnsatzCoeffs;
using gupent::maxent::AnsatzKind;
using gupent::series::Series;
namespace gs = gupent::series;

namespace {

AnsatzCoeffs custom(std::vector<double> a) { return AnsatzCoeffs(AnsatzKind::custom, std::move(a)); }

// Composite Simpson on [0, p] for the integral of 1 / (1 + a t^2).
double simpson_k(double alpha, double p, int n = 20000) {
  const double h = p / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w / (1.0 + alpha * t * t);
  }
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("GupParams") {
  CHECK_THROWS_AS(GupParams(0.1, 0.0), gupent::DomainError);
  CHECK_THROWS_AS(GupParams(NAN, 1.0), gupent::DomainError);
  CHECK(GupParams(0.36, 2.0).alpha() == doctest::Approx(0.09));
}

TEST_CASE("effective_hamiltonian_series") {
  const auto free = effective_hamiltonian_series(custom({1.0}));
  CHECK(free[2] == doctest::Approx(0.5));
  for (int j = 0; j <= free.order(); ++j) {
    if (j != 2) CHECK(std::abs(free[j]) < 1e-16);
  }
  const auto h = effective_hamiltonian_series(gupent::maxent::table1_plus());
  CHECK(h.order() == 8);
  CHECK(h[4] == doctest::Approx(-0.186849499894875).epsilon(1e-12));
  CHECK(h[6] == doctest::Approx(0.150634334).epsilon(1e-8));
  for (int j = 1; j <= 7; j += 2) CHECK(h[j] == 0.0);
  CHECK_THROWS_AS(effective_hamiltonian_series(custom({1.0, 0.1}), 5), gupent::ArgumentError);
  CHECK_THROWS_AS(effective_hamiltonian_series(custom({1.0, 0.1}), 2), gupent::ArgumentError);
}

TEST_CASE("property: Hamiltonian coefficient formulas") {
  for (int trial = 0; trial < 200; ++trial) {
    const double a1 = testutil::uniform(-0.9, 0.9);
    const double a2 = testutil::uniform(-2.0, 2.0);
    const double a3 = testutil::uniform(-2.0, 2.0);
    const double a4 = testutil::uniform(-2.0, 2.0);
    const auto h = effective_hamiltonian_series(custom({1.0, a1, a2, a3, a4}));
    CHECK(h[2] == doctest::Approx((1.0 - a1) / 2.0).epsilon(1e-13));
    CHECK(std::abs(h[4] - (a1 * a1 - 2.0 * a2) / 8.0) < 1e-13);
    CHECK(std::abs(h[6] - (-a1 * a1 * a1 + 3.0 * a1 * a2 - 3.0 * a3) / 24.0) < 1e-13);
  }
}

TEST_CASE("effective_momentum_series") {
  const auto p = effective_momentum_series(Series{0.0, 0.0, 0.5, 0.0, 0.0});
  CHECK(p[1] == doctest::Approx(1.0));
  CHECK(std::abs(p[3]) < 1e-16);
  const auto pm = effective_momentum_series(effective_hamiltonian_series(gupent::maxent::table1_minus()));
  CHECK(pm[1] == doctest::Approx(std::sqrt(1.333335)).epsilon(1e-14));
  CHECK(pm[1] == doctest::Approx(1.15470126).epsilon(1e-8));
  CHECK(pm.order() == 7);
  CHECK_THROWS_AS(effective_momentum_series(Series{0.0, 0.0, -0.5, 0.0, 1.0}), gupent::DomainError);
  CHECK_THROWS_AS(effective_momentum_series(Series{0.0, 0.1, 0.5, 0.0, 1.0}), gupent::DomainError);
  CHECK_THROWS_AS(effective_momentum_series(Series{0.2, 0.0, 0.5, 0.0, 1.0}), gupent::DomainError);
}

TEST_CASE("property: squaring the momentum gives back 2 H") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a{1.0};
    a.push_back(testutil::uniform(-0.9, 0.9));
    for (int j = 2; j <= 4; ++j) a.push_back(testutil::uniform(-2.0, 2.0));
    const auto h = effective_hamiltonian_series(custom(a));
    const auto p = effective_momentum_series(h);
    const auto sq = p * p;
    for (int j = 0; j <= sq.order(); ++j) CHECK(std::abs(sq[j] - 2.0 * h[j]) <= 1e-12);
  }
}

TEST_CASE("normalize_momentum") {
  CHECK(normalize_momentum(Series{0.0, 1.0, 0.0, 0.0}) == Series{0.0, 1.0, 0.0, 0.0});
  const auto n = normalize_momentum(Series{0.0, 2.0, 0.0, 0.5});
  CHECK(n[1] == 1.0);
  CHECK(n[3] == doctest::Approx(0.25));
  CHECK_THROWS_AS(normalize_momentum(Series{0.0, 0.0, 0.0, 1.0}), gupent::DomainError);
}

TEST_CASE("deformation_closed") {
  CHECK(deformation_closed(0.000029, 0.747398) == doctest::Approx(-0.560565).epsilon(1e-5));
  CHECK(std::abs(deformation_closed(0.000029, 0.747398) - (-0.560565)) < 1e-5);
  CHECK(std::abs(deformation_closed(-0.333335, -0.586262) - 0.361022) < 1e-5);
  CHECK(deformation_closed(0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(deformation_closed(1.0, 0.3), gupent::DomainError);
}

TEST_CASE("deformation_pipeline") {
  for (const auto& c : {gupent::maxent::table1_plus(), gupent::maxent::table1_minus()}) {
    const auto r = deformation_pipeline(c);
    CHECK(std::abs(r.alpha0_pipeline - r.alpha0_closed) <= kPipelineTolerance);
    CHECK(r.discrepancy <= kPipelineTolerance);
    CHECK(r.normalized_momentum[1] == 1.0);
  }
  const auto rp = deformation_pipeline(gupent::maxent::table1_plus());
  CHECK(std::abs(rp.normalized_momentum[3] - (-0.560565 / 3.0)) < 1e-5);
  const auto half = deformation_pipeline(custom({1.0, 0.0, 0.5}));
  CHECK(half.alpha0_pipeline == doctest::Approx(-0.375).epsilon(1e-12));
  CHECK(half.alpha0_closed == doctest::Approx(-0.375).epsilon(1e-15));
  CHECK_THROWS_AS(deformation_pipeline(custom({1.0, 1.0, 0.5})), gupent::DomainError);
  CHECK_THROWS_AS(deformation_pipeline(custom({1.0, 1.5})), gupent::DomainError);
}

TEST_CASE("property: pipeline agrees with the closed form for 1000 random sets") {
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a{1.0, testutil::uniform(-0.9, 0.9)};
    for (int j = 2; j <= 4; ++j) a.push_back(testutil::uniform(-2.0, 2.0));
    const auto r = deformation_pipeline(custom(a));
    const double closed = 3.0 * (a[1] * a[1] - 2.0 * a[2]) / (8.0 * (1.0 - a[1]));
    worst = std::max(worst, std::abs(r.alpha0_pipeline - closed));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("tsallis_coeffs") {
  const auto one = tsallis_coeffs(1.0);
  CHECK(one.coeff(0) == 1.0);
  for (int j = 1; j <= 4; ++j) CHECK(one.coeff(j) == 0.0);
  const auto c = tsallis_coeffs(0.9);
  CHECK(c.kind() == AnsatzKind::tsallis);
  CHECK(std::abs(c.coeff(1)) < 1e-15);
  CHECK(c.coeff(2) == doctest::Approx(-0.05).epsilon(1e-14));
  CHECK(deformation_closed(c.coeff(1), c.coeff(2)) == doctest::Approx(0.0375).epsilon(1e-13));
  CHECK_THROWS_AS(tsallis_coeffs(0.9, 1), gupent::ArgumentError);

  // Hand expansion with d = 1 - q.
  for (double q : {0.5, 0.9, 1.1, 1.5}) {
    const double d = 1.0 - q;
    const auto t = tsallis_coeffs(q);
    CHECK(std::abs(t.coeff(2) - (-d / 2.0)) < 1e-14);
    CHECK(std::abs(t.coeff(3) - (-d * d / 3.0)) < 1e-14);
    CHECK(std::abs(t.coeff(4) - (d * d / 8.0 - d * d * d / 4.0)) < 1e-14);
    const double a0 = deformation_pipeline(t).alpha0_pipeline;
    CHECK(std::signbit(a0) == std::signbit(d));
    CHECK(a0 / d == doctest::Approx(0.375).epsilon(1e-12));
  }
}

TEST_CASE("tsallis_coeffs reproduces the q-exponential numerically") {
  for (double q : {0.8, 1.2}) {
    const auto t = tsallis_coeffs(q, 10);
    const double x = 0.05;
    double poly = 0.0;
    for (int j = 10; j >= 0; --j) poly = poly * x + t.coeff(j);
    const double direct = std::pow(1.0 - (1.0 - q) * x, 1.0 / (1.0 - q));
    CHECK(std::exp(-x) * poly == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("p_of_k and k_of_p") {
  CHECK(p_of_k(GupParams(0.0), 0.7) == 0.7);
  CHECK(k_of_p(GupParams(0.0), 0.7) == 0.7);
  CHECK(p_of_k(GupParams(0.01), 1.0) == doctest::Approx(std::tan(0.1) / 0.1).epsilon(1e-15));
  CHECK(p_of_k(GupParams(0.01), 1.0) == doctest::Approx(1.00334672085450546).epsilon(1e-14));
  CHECK(std::abs(k_of_p(GupParams(0.01), 1.0033467208545) - 1.0) < 1e-10);
  CHECK_THROWS_AS(p_of_k(GupParams(0.25), M_PI), gupent::DomainError);
  CHECK_THROWS_AS(k_of_p(GupParams(-0.25), 2.0), gupent::DomainError);
  CHECK_THROWS_AS(k_of_p(GupParams(-0.25), -2.5), gupent::DomainError);

  for (double p : {0.3, 1.0, 2.5, 6.0}) {
    CHECK(std::abs(k_of_p(GupParams(0.04), p) - simpson_k(0.04, p)) < 1e-9);
    CHECK(std::abs(k_of_p(GupParams(-0.04), p * 0.8) - simpson_k(-0.04, p * 0.8)) < 1e-9);
  }
}

TEST_CASE("p_of_k Maclaurin coefficients match the tan series") {
  for (double alpha : {0.01, 0.25, -0.25}) {
    const GupParams g(alpha);
    // Odd polynomial fit through small k: extract coefficients via Richardson-free differences.
    const double k = 1e-2;
    const double c3 = (p_of_k(g, k) - k) / (k * k * k);
    const auto t = gs::tan_series(5);
    CHECK(c3 == doctest::Approx(alpha / 3.0 + t[5] * alpha * alpha * k * k).epsilon(1e-8));
    CHECK(t[3] == doctest::Approx(1.0 / 3.0));
    CHECK(t[5] == doctest::Approx(2.0 / 15.0));
  }
  // Tiny alpha uses the series form; compare with a long-double direct evaluation.
  const double tiny = 1e-14;
  const long double s = std::sqrt(static_cast<long double>(tiny));
  for (double k : {0.1, 1.0, 50.0}) {
    const long double direct = std::tan(s * k) / s;
    CHECK(std::abs(p_of_k(GupParams(tiny), k) - static_cast<double>(direct)) <= 1e-13 * std::abs(k));
  }
}

TEST_CASE("property: roundtrips on valid domains") {
  for (double alpha : {0.25, -0.25, 0.01, -0.01, 0.0}) {
    const GupParams g(alpha);
    // k -> p -> k amplifies the rounding of p by cosh^2(sqrt|a| k) on the tanh
    // branch, so that direction is checked up to sqrt|a| k = 4; p -> k -> p
    // covers the rest of the domain up to the cap.
    const double kmax = alpha > 0 ? 0.99 * (M_PI / 2.0) / std::sqrt(alpha)
                                  : (alpha < 0 ? 4.0 / std::sqrt(-alpha) : 20.0);
    for (int i = -50; i <= 50; ++i) {
      const double k = kmax * i / 50.0;
      const double p = p_of_k(g, k);
      CHECK(std::abs(k_of_p(g, p) - k) <= 1e-12 * std::max(1.0, std::abs(k)));
    }
    const double pmax = alpha < 0 ? 0.999999 / std::sqrt(-alpha) : p_of_k(g, kmax);
    for (int i = -50; i <= 50; ++i) {
      const double p = pmax * i / 50.0;
      CHECK(std::abs(p_of_k(g, k_of_p(g, p)) - p) <= 1e-12 * std::max(1.0, std::abs(p)));
    }
    if (alpha < 0) {
      for (double k : {10.0, 50.0, 400.0}) CHECK(std::abs(p_of_k(g, k)) <= 1.0 / std::sqrt(-alpha));
    }
    for (int i = 1; i < 40; ++i) {
      const double a = kmax * (i - 1) / 40.0;
      const double b = kmax * i / 40.0;
      CHECK(p_of_k(g, b) > p_of_k(g, a));
      CHECK(p_of_k(g, -b) == -p_of_k(g, b));
    }
  }
}

TEST_CASE("commutator_rhs is dp/dk") {
  CHECK(commutator_rhs(GupParams(0.3), 0.0) == 1.0);
  CHECK(commutator_rhs(GupParams(-0.560565), 1.0) == doctest::Approx(0.439435).epsilon(1e-15));
  for (double alpha : {0.25, -0.25, 0.01}) {
    const GupParams g(alpha);
    for (double k : {0.1, 0.5, 1.5}) {
      const double h = 1e-5;
      const double deriv = (p_of_k(g, k + h) - p_of_k(g, k - h)) / (2.0 * h);
      CHECK(std::abs(commutator_rhs(g, p_of_k(g, k)) - deriv) <= 1e-6);
    }
  }
}

TEST_CASE("uncertainty_lower_bound") {
  CHECK(uncertainty_lower_bound(GupParams(0.0), 0.25) == doctest::Approx(2.0));
  CHECK(uncertainty_lower_bound(GupParams(0.04), 5.0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK_THROWS_AS(uncertainty_lower_bound(GupParams(0.04), 0.0), gupent::DomainError);
  CHECK_THROWS_AS(uncertainty_lower_bound(GupParams(-0.25), 2.0), gupent::DomainError);

  // Golden-section oracle for the interior minimum.
  for (double alpha : {0.04, 0.361022, 1.7}) {
    const GupParams g(alpha);
    double lo = 1e-3;
    double hi = 1e3;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200; ++it) {
      const double m1 = hi - phi * (hi - lo);
      const double m2 = lo + phi * (hi - lo);
      if (uncertainty_lower_bound(g, m1) < uncertainty_lower_bound(g, m2)) hi = m2; else lo = m1;
    }
    const double dp = 0.5 * (lo + hi);
    const double minval = uncertainty_lower_bound(g, dp);
    CHECK(std::abs(minval - std::sqrt(alpha)) < 1e-12);
    CHECK(std::abs(minval * minval - alpha) <= 1e-12);
    CHECK(dp == doctest::Approx(1.0 / std::sqrt(alpha)).epsilon(1e-6));
  }
  // No interior minimum when alpha <= 0: strictly decreasing.
  for (double alpha : {0.0, -0.25}) {
    const GupParams g(alpha);
    double prev = INFINITY;
    for (int i = 1; i < 200; ++i) {
      const double v = uncertainty_lower_bound(g, i * 0.00999);
      CHECK(v < prev);
      prev = v;
    }
  }
  CHECK(std::sqrt(GupParams(0.361022).alpha()) == doctest::Approx(0.600851063).epsilon(1e-9));
}

TEST_CASE("regime_summary") {
  const auto pos = regime_summary(GupParams(0.361022));
  CHECK(pos.regime == Regime::minimal_length);
  REQUIRE(pos.minimal_length.has_value());
  CHECK(*pos.minimal_length == doctest::Approx(0.600851063).epsilon(1e-9));
  CHECK_FALSE(pos.max_momentum.has_value());

  const auto neg = regime_summary(GupParams(-0.560565));
  CHECK(neg.regime == Regime::max_momentum);
  REQUIRE(neg.max_momentum.has_value());
  CHECK(std::abs(*neg.max_momentum - 1.0 / std::sqrt(0.560565)) < 1e-12);
  CHECK(*neg.max_momentum == doctest::Approx(1.33563260).epsilon(1e-8));
  CHECK_FALSE(neg.minimal_length.has_value());
  // tanh saturation
  CHECK(p_of_k(GupParams(-0.560565), 40.0) == doctest::Approx(*neg.max_momentum).epsilon(1e-12));

  const auto zero = regime_summary(GupParams(0.0));
  CHECK(zero.regime == Regime::heisenberg);
  CHECK_FALSE(zero.minimal_length.has_value());
  CHECK_FALSE(zero.max_momentum.has_value());
  CHECK(std::string(regime_name(Regime::heisenberg)) == "heisenberg");
}
