#include "riesz/region_map.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "riesz/closed_forms.hpp"
#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

namespace {

double disk_triangle_balance(double q) {
  return 2.0 * std::sqrt(std::numbers::pi) * specfun::gamma(1.0 - q / 2.0) -
         3.0 * specfun::gamma((1.0 - q) / 2.0);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double axis_value(double lo, double hi, int i, int steps) {
  if (steps == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

double q_star() {
  static const double root = [] {
    double lo = -1.0;  // balance is pi - 3 > 0 here
    double hi = 0.0;   // and -sqrt(pi) < 0 here
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      if (disk_triangle_balance(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

double threshold_p(double q) {
  if (!(q > -2.0) || !(q < q_star())) {
    throw DomainError("threshold_p: q must lie in (-2, q_star)");
  }
  const double ratio = 2.0 * std::sqrt(std::numbers::pi) * specfun::gamma(1.0 - q / 2.0) /
                       (3.0 * specfun::gamma((1.0 - q) / 2.0));
  return q * std::log(4.0 / 3.0) / std::log(ratio);
}

RegionSample sample_region(double p, double q, int n) {
  if (!(p < 0.0) || !(q < 0.0) || n < 1) {
    throw DomainError("sample_region: need p, q < 0 and n >= 1");
  }
  RegionSample s;
  s.p = p;
  s.q = q;
  s.n = n;
  const double nn = static_cast<double>(n);
  const double exponent = 1.0 / p - 1.0 / q;
  s.ratio_simplex = std::pow(nn / (nn + 1.0), exponent);
  s.ratio_twopoint = std::pow(0.5, exponent);
  const auto ball_q = try_ball_capacity({n, 1.0}, q);
  const auto ball_p = try_ball_capacity({n, 1.0}, p);
  if (ball_q && ball_p) s.ratio_ball = *ball_q / *ball_p;

  if (n == 1 && p <= -1.0 && q <= -1.0) {
    s.winner = "constant";
    s.theorem_tag = "onedim_lowerleft";
    return s;
  }
  if (p == q) {
    s.winner = "tie";
    s.theorem_tag = "heuristic-comparison";
    return s;
  }

  // Preference order on ties: the discrete extremal sets first.
  double best = std::max(s.ratio_simplex, s.ratio_twopoint);
  if (s.ratio_ball) best = std::max(best, *s.ratio_ball);
  const double floor = best * (1.0 - 1e-12);
  if (s.ratio_simplex >= floor && n > 1) {
    s.winner = "simplex";
  } else if (s.ratio_twopoint >= floor) {
    s.winner = "two-point";
  } else {
    s.winner = "ball";
  }

  s.theorem_tag = "heuristic-comparison";
  if (n == 2 && p < q && q <= -2.0) {
    s.theorem_tag = "2deqtriangle(a)";
  } else if (n == 2 && q < p && q <= -2.0) {
    s.theorem_tag = "2deqtriangle(b)";
  } else if (n == 2 && q > -2.0 && q < q_star() && p < threshold_p(q)) {
    s.theorem_tag = "symmetrybreaking2dim";
  }
  return s;
}

std::string format_region_row(const RegionSample& s) {
  std::string row = format_double(s.p) + ',' + format_double(s.q) + ',' + std::to_string(s.n) + ',';
  if (s.ratio_ball) row += format_double(*s.ratio_ball);
  row += ',' + format_double(s.ratio_simplex) + ',' + format_double(s.ratio_twopoint) + ',' +
         s.winner + ',' + s.theorem_tag;
  return row;
}

void emit_grid(std::ostream& out, const GridSpec& grid) {
  if (grid.steps <= 0) throw DomainError("emit_grid: steps must be positive");
  if (!(grid.pmax < 0.0) || !(grid.qmax < 0.0) || grid.pmin > grid.pmax || grid.qmin > grid.qmax) {
    throw DomainError("emit_grid: ranges must be ordered and lie in p, q < 0");
  }
  out << kRegionCsvHeader << '\n';
  for (int j = 0; j < grid.steps; ++j) {
    const double q = axis_value(grid.qmin, grid.qmax, j, grid.steps);
    for (int i = 0; i < grid.steps; ++i) {
      const double p = axis_value(grid.pmin, grid.pmax, i, grid.steps);
      out << format_region_row(sample_region(p, q, grid.n)) << '\n';
    }
  }
}

}  // namespace riesz
