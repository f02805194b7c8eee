#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

using namespace riesz;
using doctest::Approx;

TEST_CASE("gamma at known values") {
  CHECK(specfun::gamma(0.5) == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(specfun::gamma(5.0) == Approx(24.0).epsilon(1e-14));
  CHECK(specfun::gamma(1.0) == Approx(1.0).epsilon(1e-14));
  // mpmath: gamma(1.75)
  CHECK(specfun::gamma(1.75) == Approx(0.919062526848883).epsilon(1e-13));
}

TEST_CASE("gamma recurrence and reflection square") {
  for (double x = 0.1; x <= 50.0; x += 0.0737) {
    const double lhs = specfun::gamma(x + 1.0);
    const double rhs = x * specfun::gamma(x);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-12);
  }
  const double g = specfun::gamma(0.5);
  CHECK(std::abs(g * g - std::numbers::pi) / std::numbers::pi < 1e-12);
}

TEST_CASE("gamma agrees with libm") {
  for (double x = 0.05; x < 20.0; x += 0.13) {
    CHECK(specfun::gamma(x) == Approx(oracle::libm_gamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(specfun::gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("elliptic K at known values") {
  CHECK(specfun::complete_elliptic_k(0.0) == Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(specfun::complete_elliptic_k(0.8) == Approx(1.99530277766473).epsilon(1e-13));
  CHECK(specfun::complete_elliptic_k(0.999999) > 7.0);
  CHECK(specfun::complete_elliptic_k_complementary(0.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("elliptic K mpmath reference values") {
  const double ks[] = {0.1, 0.2, 0.5, 0.9, 0.99};
  const double ref[] = {1.57474556151736, 1.58686784745417, 1.68575035481260, 2.28054913842277,
                        3.35660052336119};
  for (int i = 0; i < 5; ++i) {
    CHECK(specfun::complete_elliptic_k(ks[i]) == Approx(ref[i]).epsilon(1e-13));
  }
}

TEST_CASE("AGM agrees with quadrature") {
  for (double k : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
    const double agm = specfun::complete_elliptic_k(k);
    CHECK(std::abs(agm - oracle::elliptic_k_quadrature(k)) / agm < 1e-10);
  }
}

TEST_CASE("complementary form matches the direct form") {
  for (double k = 0.0; k < 0.999; k += 0.0173) {
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    CHECK(specfun::complete_elliptic_k_complementary(kp) ==
          Approx(specfun::complete_elliptic_k(k)).epsilon(1e-13));
  }
}

TEST_CASE("elliptic K strictly increasing") {
  double prev = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double v = specfun::complete_elliptic_k(i / 2000.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("elliptic K domain") {
  CHECK_THROWS_AS(specfun::complete_elliptic_k(1.0), DomainError);
  CHECK_THROWS_AS(specfun::complete_elliptic_k(-0.1), DomainError);
}
