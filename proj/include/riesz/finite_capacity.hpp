#ifndef RIESZ_FINITE_CAPACITY_HPP
#define RIESZ_FINITE_CAPACITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "riesz/configuration.hpp"

namespace riesz {

/// Pairwise interaction matrix Q_ij = |x_i - x_j|^t with t = -p > 0.
struct KernelMatrix {
  Eigen::MatrixXd entries;
  double exponent = 1.0;  // t = -p

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// Probability weights on the points of a configuration.
struct DiscreteMeasure {
  Eigen::VectorXd weights;
  std::vector<std::size_t> support;  // indices with strictly positive weight

  /// Builds the support list from the weights; entries <= zero_tol are zeroed.
  static DiscreteMeasure from_weights(Eigen::VectorXd weights, double zero_tol = 0.0);
};

/// Outcome of solving the first-order system on one support face.
struct SupportCritical {
  DiscreteMeasure measure;  // strictly positive on the face
  double energy = 0.0;      // lambda / 2, equal to w^T Q w
  /// Directions (full length k, summing to zero) spanning the affine family of
  /// critical points on this face. Empty when the critical point is isolated.
  std::vector<Eigen::VectorXd> family_directions;
  /// For one-dimensional families: the two boundary measures of the segment.
  std::optional<std::pair<DiscreteMeasure, DiscreteMeasure>> family_endpoints;
  /// A singular value of the bordered system fell near the rank cutoff.
  bool rank_ambiguous = false;
};

struct CapacityResult {
  double p = -1.0;
  double energy = 0.0;    // V_p
  double capacity = 0.0;  // V_p^(-1/p)
  std::vector<SupportCritical> measures;  // all distinct maximizers
  bool unique = false;
  int family_dimension = 0;
  bool rank_ambiguous = false;
};

struct CapacityOptions {
  /// Largest k for which exhaustive enumeration over all supports is allowed
  /// when no reduction applies.
  std::size_t max_points = 16;
  /// Apply the extreme-point reduction for p < -2.
  bool reduce = true;
  /// Worker threads; 0 means RIESZ_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

/// Q for the configuration. Throws DegenerateConfiguration when two points are
/// closer than 1e-12 times the diameter, DomainError unless p < 0.
KernelMatrix kernel_matrix(const Configuration& config, double p);

/// Solves Q_S w = (lambda/2) 1, sum(w) = 1 on the face `support` (|S| >= 2).
/// Returns at most one entry: the critical point (or a strictly positive
/// representative of the affine family of critical points) when it lies in
/// the open face, nothing otherwise.
std::vector<SupportCritical> critical_point_on_support(const KernelMatrix& kernel,
                                                       std::span<const std::size_t> support);

/// Riesz p-capacity (p < 0) and every equilibrium measure of a finite set.
CapacityResult finite_capacity(const Configuration& config, double p,
                               const CapacityOptions& options = {});

/// Indices of the extreme points of the convex hull, in increasing order.
std::vector<std::size_t> extreme_point_indices(const Configuration& config);

/// Extreme points of the convex hull; for p < -2 every equilibrium measure
/// lives there, on at most (affine dimension + 1) points.
Configuration bjorck_reduce(const Configuration& config, double p);

struct KktReport {
  bool certified = false;
  double value = 0.0;              // m^T Q m
  Eigen::VectorXd potentials;      // (Q m)_i
  double max_violation = 0.0;      // relative to value
};

/// First-order maximality test for a measure on the simplex: the potential is
/// constant on the support and no larger anywhere else (relative tol 1e-9).
KktReport kkt_certificate(const KernelMatrix& kernel, const DiscreteMeasure& measure,
                          double rel_tol = 1e-9);

/// Worker count from RIESZ_THREADS (if set and positive) capped by hardware.
unsigned default_thread_count();

}  // namespace riesz

#endif  // RIESZ_FINITE_CAPACITY_HPP
