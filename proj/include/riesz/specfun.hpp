#ifndef RIESZ_SPECFUN_HPP
#define RIESZ_SPECFUN_HPP

namespace riesz::specfun {

/// Gamma function for x > 0 (Lanczos approximation, relative error ~1e-15).
/// Throws DomainError for non-positive or non-finite x.
double gamma(double x);

/// Complete elliptic integral of the first kind in the *modulus* convention,
///
///   K(k) = \int_0^{pi/2} d\theta / sqrt(1 - k^2 sin^2 \theta),  0 <= k < 1.
///
/// Note that the argument is k, not the parameter m = k^2.
double complete_elliptic_k(double k);

/// K expressed through the complementary modulus k' = sqrt(1 - k^2), which
/// avoids cancellation as k -> 1. Returns +infinity at k' = 0.
double complete_elliptic_k_complementary(double k_prime);

}  // namespace riesz::specfun

#endif  // RIESZ_SPECFUN_HPP
