#include "riesz/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "riesz/errors.hpp"

namespace riesz::specfun {

namespace {

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

// Gamma(z + 1) for z > -0.5.
double lanczos_gamma_shifted(double z) {
  double series = kLanczosCoeff[0];
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) {
    series += kLanczosCoeff[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // Split the power so that t^(z+1/2) does not overflow before exp(-t) scales it.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * std::exp(-t) *
         half_power * series;
}

double agm(double a, double b) {
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(a - b) < 1e-15 * a) break;
    const double mean = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = mean;
  }
  return 0.5 * (a + b);
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("gamma: argument must be positive and finite, got " +
                      std::to_string(x));
  }
  if (x < 0.5) return lanczos_gamma_shifted(x) / x;
  return lanczos_gamma_shifted(x - 1.0);
}

double complete_elliptic_k_complementary(double k_prime) {
  if (!(k_prime >= 0.0) || k_prime > 1.0) {
    throw DomainError("complete_elliptic_k: complementary modulus must lie in [0, 1]");
  }
  if (k_prime == 0.0) return std::numeric_limits<double>::infinity();
  return std::numbers::pi / (2.0 * agm(1.0, k_prime));
}

double complete_elliptic_k(double k) {
  if (!(k >= 0.0) || k >= 1.0) {
    throw DomainError("complete_elliptic_k: modulus must lie in [0, 1), got " +
                      std::to_string(k));
  }
  return complete_elliptic_k_complementary(std::sqrt((1.0 - k) * (1.0 + k)));
}

}  // namespace riesz::specfun
