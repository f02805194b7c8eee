#ifndef RIESZ_TRIANGLE_HPP
#define RIESZ_TRIANGLE_HPP

#include "riesz/configuration.hpp"

namespace riesz {

/// Side lengths of a three-point set, ordered so that c is the longest side:
/// 0 < a, b <= c. The capacity formula only needs this; a + b < c has no
/// planar realization but is still accepted as distance data.
struct TriangleShape {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;

  /// Sorts three arbitrary side lengths into canonical order and validates.
  static TriangleShape from_sides(double s1, double s2, double s3);

  /// Throws DomainError unless the sides are positive with c the longest.
  void validate() const;
};

/// Equilibrium weights: x and y sit at the endpoints of the longest side c,
/// z at the opposite vertex (distance b from x, a from y).
struct TriangleEquilibrium {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double energy = 0.0;  // lambda / 2
  bool interior = false;
};

struct TriangleCapacity {
  double capacity = 0.0;
  TriangleEquilibrium equilibrium;
};

/// Closed-form p-capacity (p < 0) of a three-point set. With t = -p,
/// a^t + b^t <= c^t gives 2^(-1/t) c with mass 1/2 on each end of c;
/// otherwise the measure charges all three points.
TriangleCapacity triangle_capacity(const TriangleShape& shape, double p);

/// cap_q / cap_p for the triangle with sides (a, b, 1).
double ratio_R(double a, double b, double p, double q);

struct HeronDenominator {
  double expanded = 0.0;  // 2(AB + BC + CA) - (A^2 + B^2 + C^2)
  double factored = 0.0;  // product of the four Heron factors in sqrt(A), sqrt(B), sqrt(C)
};

HeronDenominator heron_denominator(double A, double B, double C);

/// Vertex coordinates in the order (x, y, z) of TriangleEquilibrium, with the
/// longest side on the first axis. Requires a + b >= c.
Configuration triangle_coordinates(const TriangleShape& shape);

}  // namespace riesz

#endif  // RIESZ_TRIANGLE_HPP
