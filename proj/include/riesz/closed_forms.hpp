#ifndef RIESZ_CLOSED_FORMS_HPP
#define RIESZ_CLOSED_FORMS_HPP

#include <optional>

namespace riesz {

// Closed ball of the given radius in R^n.
struct BallSpec {
  int n = 1;
  double radius = 1.0;
};

// Filled ellipse with semi-axes 1 and b.
struct EllipseSpec {
  double b = 1.0;
};

// Solid ellipsoid in R^3 with semi-axes 1, 1, b.
struct EllipsoidSpec {
  double b = 1.0;
};

/// p-capacity of a regular k-point set with diameter d, p < 0.
double regular_kpoint_capacity(int k, double d, double p);

/// p-capacity of a segment of the given length; only p <= -1 is supported.
double interval_capacity(double length, double p);

/// p-capacity of a ball where a closed form is known, std::nullopt otherwise.
///
/// Supported exponents:
///   p <= -2 (every n), and -2 < p <= -1 for n = 1 (segment),
///   p = 0 for n = 1, 2, 3 (logarithmic),
///   p = n - 2 for n >= 3 (Newtonian), p = n - 1 for n >= 2,
///   -2 < p < 0 for n = 2 (disk).
std::optional<double> try_ball_capacity(const BallSpec& ball, double p);

/// Same as try_ball_capacity but throws UnsupportedParameter for unknown
/// (n, p) pairs.
double ball_capacity(const BallSpec& ball, double p);

double ellipse_log_capacity(const EllipseSpec& ellipse);

/// Newtonian 1-capacity of the filled ellipse, 1 / K(sqrt(1 - b^2)).
double ellipse_newtonian_capacity(const EllipseSpec& ellipse);

double ellipsoid_cap1(const EllipsoidSpec& ellipsoid);
double ellipsoid_cap2(const EllipsoidSpec& ellipsoid);

}  // namespace riesz

#endif  // RIESZ_CLOSED_FORMS_HPP
