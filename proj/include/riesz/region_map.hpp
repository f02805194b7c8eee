#ifndef RIESZ_REGION_MAP_HPP
#define RIESZ_REGION_MAP_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace riesz {

/// Root in (-1, 0) of 2 sqrt(pi) Gamma(1 - q/2) = 3 Gamma((1 - q)/2), to 1e-12.
double q_star();

/// Largest p (for -2 < q < q_star) below which the regular three-point set
/// beats the disk for the ratio cap_q / cap_p.
double threshold_p(double q);

/// Candidate ratios cap_q / cap_p at one point of the (p, q) plane.
struct RegionSample {
  double p = 0.0;
  double q = 0.0;
  int n = 2;
  std::optional<double> ratio_ball;  // only where the ball capacity is known at p and q
  double ratio_simplex = 0.0;        // regular (n+1)-point set
  double ratio_twopoint = 0.0;
  std::string winner;       // "simplex", "two-point", "ball", "constant" or "tie"
  std::string theorem_tag;  // certified region, or "heuristic-comparison"
};

RegionSample sample_region(double p, double q, int n);

struct GridSpec {
  double pmin = -4.0;
  double pmax = -1.0;
  double qmin = -4.0;
  double qmax = -1.0;
  int steps = 10;  // points per axis
  int n = 2;
};

inline constexpr const char* kRegionCsvHeader =
    "p,q,n,ratio_ball,ratio_simplex,ratio_twopoint,winner,theorem_tag";

/// Writes the header plus one row per grid point, q in the outer loop and p
/// varying fastest.
void emit_grid(std::ostream& out, const GridSpec& grid);

std::string format_region_row(const RegionSample& sample);

}  // namespace riesz

#endif  // RIESZ_REGION_MAP_HPP
