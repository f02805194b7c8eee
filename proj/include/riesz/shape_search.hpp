#ifndef RIESZ_SHAPE_SEARCH_HPP
#define RIESZ_SHAPE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "riesz/configuration.hpp"

namespace riesz {

struct SearchProblem {
  int n = 2;               // ambient dimension
  int k = 3;               // number of points
  double p = -4.0;
  double q = -3.0;
  int restarts = 20;
  int iterations = 3000;   // objective evaluations per restart
  std::uint64_t seed = 1;
  unsigned threads = 0;    // 0: RIESZ_THREADS or hardware concurrency

  void validate() const;
};

struct Classification {
  std::string label;  // "two-point", "regular-simplex-<m>" or "other"
  std::vector<std::vector<std::size_t>> p_supports;
  std::vector<std::vector<std::size_t>> q_supports;
  std::size_t merged_count = 0;  // points left after merging near-coincident ones
};

struct TracePoint {
  int iteration = 0;  // objective evaluations so far
  double ratio = 0.0; // best ratio so far
};

struct RestartTrace {
  int restart = 0;
  double best_ratio = 0.0;
  std::vector<TracePoint> points;
};

struct SearchResult {
  Configuration best;   // centered, diameter 1
  double ratio = 0.0;
  int best_restart = 0;
  std::vector<RestartTrace> traces;
  Classification classification;
};

/// Translates the centroid to the origin and rescales to diameter 1.
Configuration normalize_diameter(const Configuration& config);

/// Collapses points closer than rel_tol * diameter onto the earlier point.
Configuration merge_coincident(const Configuration& config, double rel_tol = 1e-9);

/// cap_q / cap_p of the merged configuration; NaN when fewer than two
/// distinct points remain.
double capacity_ratio(const Configuration& config, double p, double q);

/// Labels the configuration by its equilibrium supports. Any non-uniqueness
/// at p or q gives "other"; otherwise a two-point q-support gives
/// "two-point", and an m-point q-support with all pairwise distances equal
/// within tol (relative) gives "regular-simplex-m".
Classification classify_configuration(const Configuration& config, double p, double q,
                                      double tol = 1e-3);

/// Multi-restart Nelder-Mead maximization of cap_q / cap_p over k-point sets in
/// R^n. Deterministic for a fixed problem (including seed and restarts).
SearchResult optimize_ratio(const SearchProblem& problem);

}  // namespace riesz

#endif  // RIESZ_SHAPE_SEARCH_HPP
