#include "riesz/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

namespace {

void require_valid_b(double b, double lo_exclusive_guard, const char* what) {
  if (!std::isfinite(b) || b < lo_exclusive_guard || b > 1.0) {
    throw DomainError(std::string(what) + ": semi-axis b out of range, got " +
                      std::to_string(b));
  }
}

// Unit disk, -2 < p < 0.
double unit_disk_capacity(double p) {
  const double bracket = std::sqrt(std::numbers::pi) * specfun::gamma(1.0 - p / 2.0) /
                         specfun::gamma((1.0 - p) / 2.0);
  return 2.0 * std::pow(bracket, 1.0 / p);
}

}  // namespace

double regular_kpoint_capacity(int k, double d, double p) {
  if (k < 2) throw DomainError("regular_kpoint_capacity: need k >= 2");
  if (!(d > 0.0)) throw DomainError("regular_kpoint_capacity: diameter must be positive");
  if (!(p < 0.0)) {
    throw DomainError("regular_kpoint_capacity: finite sets have zero capacity for p >= 0");
  }
  const double kk = static_cast<double>(k);
  return std::pow((kk - 1.0) / kk, -1.0 / p) * d;
}

double interval_capacity(double length, double p) {
  if (!std::isfinite(length) || length < 0.0) {
    throw DomainError("interval_capacity: length must be nonnegative");
  }
  if (!(p <= -1.0)) {
    throw UnsupportedParameter("interval_capacity: only p <= -1 is supported, got p = " +
                               std::to_string(p));
  }
  return std::pow(2.0, 1.0 / p) * length;
}

std::optional<double> try_ball_capacity(const BallSpec& ball, double p) {
  if (ball.n < 1) throw DomainError("ball_capacity: dimension must be >= 1");
  if (!(ball.radius > 0.0)) throw DomainError("ball_capacity: radius must be positive");
  if (!std::isfinite(p)) return std::nullopt;

  const int n = ball.n;
  const double nn = static_cast<double>(n);
  std::optional<double> unit;
  if (p <= -2.0 || (n == 1 && p <= -1.0)) {
    unit = std::pow(2.0, 1.0 + 1.0 / p);
  } else if (p == 0.0 && n <= 3) {
    // logarithmic capacity of the unit ball in dimensions 1, 2, 3
    switch (n) {
      case 1: unit = 0.5; break;
      case 2: unit = 1.0; break;
      default: unit = 2.0 * std::exp(-0.5); break;
    }
  } else if (n >= 3 && p == nn - 2.0) {
    unit = 1.0;
  } else if (n >= 2 && p == nn - 1.0) {
    const double ratio = specfun::gamma(nn / 2.0) /
                         (specfun::gamma(0.5) * specfun::gamma((nn + 1.0) / 2.0));
    unit = std::pow(ratio, 1.0 / (nn - 1.0));
  } else if (n == 2 && p > -2.0 && p < 0.0) {
    unit = unit_disk_capacity(p);
  }
  if (!unit) return std::nullopt;
  return *unit * ball.radius;
}

double ball_capacity(const BallSpec& ball, double p) {
  auto value = try_ball_capacity(ball, p);
  if (!value) {
    throw UnsupportedParameter("ball_capacity: no closed form for n = " +
                               std::to_string(ball.n) + ", p = " + std::to_string(p));
  }
  return *value;
}

double ellipse_log_capacity(const EllipseSpec& ellipse) {
  require_valid_b(ellipse.b, 0.0, "ellipse_log_capacity");
  return (1.0 + ellipse.b) / 2.0;
}

double ellipse_newtonian_capacity(const EllipseSpec& ellipse) {
  require_valid_b(ellipse.b, 0.0, "ellipse_newtonian_capacity");
  // The complementary modulus of sqrt(1 - b^2) is b itself.
  if (ellipse.b == 0.0) return 0.0;
  return 1.0 / specfun::complete_elliptic_k_complementary(ellipse.b);
}

double ellipsoid_cap1(const EllipsoidSpec& ellipsoid) {
  const double b = ellipsoid.b;
  if (!(b > 0.0)) throw DomainError("ellipsoid_cap1: b must be positive");
  require_valid_b(b, 0.0, "ellipsoid_cap1");
  if (b == 1.0) return 1.0;
  const double s = std::sqrt((1.0 - b) * (1.0 + b));
  return s / std::asin(s);
}

double ellipsoid_cap2(const EllipsoidSpec& ellipsoid) {
  const double b = ellipsoid.b;
  if (!(b > 0.0)) throw DomainError("ellipsoid_cap2: b must be positive");
  require_valid_b(b, 0.0, "ellipsoid_cap2");
  if (b == 1.0) return 1.0 / std::numbers::sqrt2;
  const double s = std::sqrt((1.0 - b) * (1.0 + b));
  const double x = s / b;  // sqrt(1/b^2 - 1)
  const double arcsinh = std::log(x + std::sqrt(x * x + 1.0));
  return std::sqrt(s / (2.0 * arcsinh));
}

}  // namespace riesz
