#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>

#include "gupent/errors.hpp"
#include "gupent/series.hpp"
#include "gupent/superstats.hpp"

using namespace gupent::superstats;

namespace {

// Independent route: exp-sinh quadrature on [0, inf) in the original beta variable.
template <class F>
double integrate_half_line(F f) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GammaBetaParams(0.0, 1.0), gupent::DomainError);
  CHECK_THROWS_AS(GammaBetaParams(1.5, 1.0), gupent::DomainError);
  CHECK_THROWS_AS(GammaBetaParams(0.5, 0.0), gupent::DomainError);
  CHECK_THROWS_AS(GammaBetaParams(0.5, -2.0), gupent::DomainError);
  CHECK_NOTHROW(GammaBetaParams(1.0, 1.0));
}

TEST_CASE("gamma function accuracy") {
  CHECK(gamma_function(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_function(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  for (double x : {0.3, 1.7, 3.25, 10.5, 20.0}) {
    CHECK(std::abs(gamma_function(x) / std::tgamma(x) - 1.0) <= 1e-13);
  }
}

TEST_CASE("gamma_pdf moments") {
  for (double p : {0.1, 0.35, 0.5, 0.8, 1.0}) {
    for (double beta0 : {0.5, 1.0, 2.0}) {
      const GammaBetaParams params(p, beta0);
      auto pdf = [&](double b) { return gamma_pdf(params, b); };
      const double norm = integrate_half_line(pdf);
      const double mean = integrate_half_line([&](double b) { return b * pdf(b); });
      const double var = integrate_half_line([&](double b) { return (b - beta0) * (b - beta0) * pdf(b); });
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(mean == doctest::Approx(beta0).epsilon(1e-9));
      CHECK(var == doctest::Approx(p * beta0 * beta0).epsilon(1e-8));
    }
  }
  CHECK(gamma_pdf(GammaBetaParams(0.5, 1.0), 0.0) == 0.0);
  CHECK(gamma_pdf(GammaBetaParams(1.0, 2.0), 0.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(gamma_pdf(GammaBetaParams(0.5, 1.0), -1.0), gupent::DomainError);
}

TEST_CASE("boltzmann_closed") {
  CHECK(boltzmann_closed(GammaBetaParams(0.3, 1.0), 0.0) == 1.0);
  CHECK(boltzmann_closed(GammaBetaParams(1.0, 1.0), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(boltzmann_closed(GammaBetaParams(1e-8, 1.0), 1.0) - std::exp(-1.0)) < 1e-6);
  CHECK_THROWS_AS(boltzmann_closed(GammaBetaParams(0.3, 1.0), -0.1), gupent::DomainError);
}

TEST_CASE("boltzmann_closed is the Laplace transform of the pdf") {
  for (double p : {0.2, 0.5, 1.0}) {
    const GammaBetaParams params(p, 1.3);
    for (double e : {0.0, 0.4, 2.0}) {
      const double direct =
          integrate_half_line([&](double b) { return gamma_pdf(params, b) * std::exp(-b * e); });
      CHECK(direct == doctest::Approx(boltzmann_closed(params, e)).epsilon(1e-9));
    }
  }
}

TEST_CASE("boltzmann_quadrature examples") {
  CHECK(boltzmann_quadrature(GammaBetaParams(0.5, 1.0), 1.0, 1e-8) ==
        doctest::Approx(1.0 / 2.25).epsilon(1e-8));
  CHECK(boltzmann_quadrature(GammaBetaParams(0.7, 1.0), 0.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-8));
  // (1 + 0.2 * 2 * 3)^(-5) = 2.2^-5
  CHECK(boltzmann_quadrature(GammaBetaParams(0.2, 2.0), 3.0, 1e-8) ==
        doctest::Approx(0.0194037913455985992).epsilon(1e-8));
  CHECK_THROWS_AS(boltzmann_quadrature(GammaBetaParams(0.5, 1.0), -1.0, 1e-8), gupent::DomainError);
  CHECK_THROWS_AS(boltzmann_quadrature(GammaBetaParams(0.5, 1.0), 1.0, 0.0), gupent::ArgumentError);
}

TEST_CASE("boltzmann_quadrature reports non-convergence with its estimate") {
  // Tolerance below double resolution cannot be certified.
  try {
    (void)boltzmann_quadrature(GammaBetaParams(0.37, 1.0), 2.0, 1e-20);
    FAIL("expected NumericalError");
  } catch (const gupent::NumericalError& e) {
    CHECK(e.estimate() == doctest::Approx(boltzmann_closed(GammaBetaParams(0.37, 1.0), 2.0)).epsilon(1e-10));
    CHECK(e.error_estimate() > 0.0);
  }
}

TEST_CASE("property: quadrature matches closed form on the 20x20 grid") {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double p = 0.05 + i * (0.95 / 19.0);
    for (int j = 0; j < 20; ++j) {
      const double x = j * (5.0 / 19.0);
      const GammaBetaParams params(p, 1.0);
      const double closed = boltzmann_closed(params, x);
      worst = std::max(worst, std::abs(boltzmann_quadrature(params, x, 1e-9) - closed) / closed);
    }
  }
  CHECK(worst <= 1e-7);
}

TEST_CASE("property: monotonicity of the closed form") {
  for (double p : {0.05, 0.3, 0.7, 1.0}) {
    const GammaBetaParams params(p, 1.0);
    double prev = boltzmann_closed(params, 0.0);
    for (int j = 1; j <= 50; ++j) {
      const double v = boltzmann_closed(params, 0.1 * j);
      CHECK(v < prev);
      prev = v;
    }
  }
  for (double x : {0.1, 1.0, 4.0}) {
    double prev = 0.0;
    for (int i = 1; i <= 20; ++i) {
      const double v = boltzmann_closed(GammaBetaParams(0.05 * i, 1.0), x);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("property: p -> 0 recovers the ordinary Boltzmann factor") {
  for (double x : {0.0, 0.5, 1.0, 3.0, 5.0}) {
    CHECK(std::abs(boltzmann_closed(GammaBetaParams(1e-8, 1.0), x) - std::exp(-x)) < 1e-6);
  }
}

TEST_CASE("boltzmann_series") {
  const GammaBetaParams params(0.01, 1.0);
  CHECK(boltzmann_series(params, 1.0, 0) == doctest::Approx(std::exp(-1.0)));
  CHECK(std::abs(boltzmann_series(params, 1.0, 2) - boltzmann_closed(params, 1.0)) < 5e-6);
  CHECK(std::abs(boltzmann_series(params, 1.0, 1) - boltzmann_closed(params, 1.0)) < 1e-5);
  // Order 2 carries the p^2 (bE)^4 / 8 term and beats order 1.
  CHECK(std::abs(boltzmann_series(params, 1.0, 2) - boltzmann_closed(params, 1.0)) < 1e-7);
  CHECK_THROWS_AS(boltzmann_series(params, 1.0, 3), gupent::ArgumentError);
  CHECK_THROWS_AS(boltzmann_series(params, 1.0, -1), gupent::ArgumentError);

  const double x = 0.7;
  const double p = 0.02;
  const double expected = std::exp(-x) * (1.0 + p * x * x / 2.0 + p * p * (std::pow(x, 4) / 8.0 - std::pow(x, 3) / 3.0));
  CHECK(boltzmann_series(GammaBetaParams(p, 1.0), x, 2) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("small-p exponent coefficients via the series module") {
  // ln B = -(1/p) ln(1 + p b E): expand ln(1 + X p) in p and shift.
  namespace gs = gupent::series;
  for (double beta0 : {1.0, 2.0}) {
    for (double e : {0.5, 1.5}) {
      const double x = beta0 * e;
      const auto l = gs::ln_one_plus(x * gs::Series::variable(3));
      // ln B = -l_1 - l_2 p - l_3 p^2 - ...
      CHECK(-l[1] == doctest::Approx(-beta0 * e));
      CHECK(-l[2] == doctest::Approx(0.5 * beta0 * beta0 * e * e));
      CHECK(-l[3] == doctest::Approx(-std::pow(beta0, 3) * std::pow(e, 3) / 3.0));
    }
  }
}

TEST_CASE("table kernels: serial and parallel agree bitwise") {
  const std::vector<double> ps{0.05, 0.5, 1.0};
  const std::vector<double> xs{0.0, 1.0, 5.0};
  const auto a = boltzmann_table(ps, xs, 1.0, 1e-9);
  const auto b = boltzmann_table_serial(ps, xs, 1.0, 1e-9);
  REQUIRE(a.size() == 9);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].quadrature == b[i].quadrature);
    CHECK(a[i].closed == b[i].closed);
  }
  CHECK(a[4].p == 0.5);
  CHECK(a[4].beta0_energy == 1.0);
}
