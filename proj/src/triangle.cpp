#include "riesz/triangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

TriangleShape TriangleShape::from_sides(double s1, double s2, double s3) {
  std::array<double, 3> s{s1, s2, s3};
  std::sort(s.begin(), s.end());
  TriangleShape shape{s[0], s[1], s[2]};
  shape.validate();
  return shape;
}

void TriangleShape::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !(a > 0.0) ||
      !(b > 0.0)) {
    throw DomainError("triangle: side lengths must be positive and finite");
  }
  if (a > c || b > c) throw DomainError("triangle: c must be the longest side");
}

HeronDenominator heron_denominator(double A, double B, double C) {
  const double ra = std::sqrt(A);
  const double rb = std::sqrt(B);
  const double rc = std::sqrt(C);
  return {2.0 * (A * B + B * C + C * A) - (A * A + B * B + C * C),
          (ra + rb - rc) * (rb + rc - ra) * (rc + ra - rb) * (ra + rb + rc)};
}

TriangleCapacity triangle_capacity(const TriangleShape& shape, double p) {
  shape.validate();
  if (!std::isfinite(p) || !(p < 0.0)) {
    throw DomainError("triangle_capacity: requires p < 0, got " + std::to_string(p));
  }
  const double t = -p;
  const double A = std::pow(shape.a, t);
  const double B = std::pow(shape.b, t);
  const double C = std::pow(shape.c, t);

  TriangleCapacity out;
  auto& eq = out.equilibrium;
  if (A + B <= C) {
    eq.x = eq.y = 0.5;
    eq.energy = C / 2.0;
    out.capacity = std::pow(2.0, -1.0 / t) * shape.c;
    return out;
  }

  // Interior critical point. The differences to C are exact when A or B is
  // close to C, which keeps thin triangles accurate.
  const double dA = C - A;
  const double dB = C - B;
  const double excess = A >= B ? B - dA : A - dB;  // A + B - C
  const double denom = 4.0 * A * B - excess * excess;  // 16 (Heron area)^2 > 0
  const double half_lambda = 2.0 * A * B * C / denom;
  const double factor = half_lambda / (2.0 * A * B * C);
  eq.x = factor * A * (B + dA);
  eq.y = factor * B * (A + dB);
  eq.z = factor * C * excess;
  eq.energy = half_lambda;
  eq.interior = true;
  out.capacity = std::pow(half_lambda, 1.0 / t);
  return out;
}

double ratio_R(double a, double b, double p, double q) {
  if (!(a > 0.0 && a <= 1.0 && b > 0.0 && b <= 1.0) || a + b < 1.0) {
    throw DomainError("ratio_R: need 0 < a, b <= 1 and a + b >= 1");
  }
  if (!(p < 0.0) || !(q < 0.0) || p == q) {
    throw DomainError("ratio_R: need distinct negative exponents");
  }
  const TriangleShape shape{a, b, 1.0};
  return triangle_capacity(shape, q).capacity / triangle_capacity(shape, p).capacity;
}

Configuration triangle_coordinates(const TriangleShape& shape) {
  shape.validate();
  if (shape.a + shape.b < shape.c * (1.0 - 1e-12)) {
    throw DomainError("triangle_coordinates: sides violate the triangle inequality");
  }
  const double apex_x = (shape.b * shape.b + shape.c * shape.c - shape.a * shape.a) / (2.0 * shape.c);
  const double apex_y = std::sqrt(std::max(0.0, shape.b * shape.b - apex_x * apex_x));
  return Configuration{{0.0, 0.0}, {shape.c, 0.0}, {apex_x, apex_y}};
}

}  // namespace riesz
