#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "riesz/errors.hpp"
#include "riesz/region_map.hpp"

using namespace riesz;
using doctest::Approx;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> rows_of(const GridSpec& g) {
  std::ostringstream out;
  emit_grid(out, g);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == kRegionCsvHeader);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) rows.push_back(split(line));
  return rows;
}

}  // namespace

TEST_CASE("q star") {
  const double q = q_star();
  CHECK(q == Approx(-0.856041628127670).epsilon(1e-11));
  const double residual = 2 * std::sqrt(std::numbers::pi) * oracle::libm_gamma(1 - q / 2) -
                          3 * oracle::libm_gamma((1 - q) / 2);
  CHECK(std::abs(residual) < 1e-10);
}

TEST_CASE("threshold p") {
  CHECK(threshold_p(-1.5) == Approx(-2.38713168797463).epsilon(1e-11));
  CHECK(threshold_p(q_star() - 1e-9) < -1e3);
  CHECK_THROWS_AS(threshold_p(-0.5), DomainError);
  CHECK_THROWS_AS(threshold_p(-2.5), DomainError);
}

TEST_CASE("sample examples") {
  const auto a = sample_region(-4, -3, 2);
  CHECK(a.winner == "simplex");
  CHECK(a.ratio_simplex == Approx(std::pow(2.0 / 3.0, 1.0 / 12.0)).epsilon(1e-14));
  CHECK(a.theorem_tag == "2deqtriangle(a)");

  const auto b = sample_region(-3, -4, 2);
  CHECK(b.winner == "two-point");
  CHECK(b.ratio_twopoint == Approx(std::pow(2.0, 1.0 / 12.0)).epsilon(1e-14));
  CHECK(b.theorem_tag == "2deqtriangle(b)");

  const auto c = sample_region(-10, -1.5, 2);
  CHECK(c.winner == "simplex");
  REQUIRE(c.ratio_ball.has_value());
  CHECK(*c.ratio_ball < c.ratio_simplex);
  CHECK(c.theorem_tag == "symmetrybreaking2dim");

  const auto d = sample_region(-2, -3, 1);
  CHECK(d.winner == "constant");
  CHECK(d.theorem_tag == "onedim_lowerleft");

  CHECK(sample_region(-3, -3, 2).winner == "tie");
}

TEST_CASE("simplex beats two-point iff p < q") {
  for (double p = -6; p < -0.2; p += 0.37) {
    for (double q = -6; q < -0.2; q += 0.41) {
      const auto s = sample_region(p, q, 2);
      CHECK((s.ratio_simplex > s.ratio_twopoint) == (p < q));
    }
  }
}

TEST_CASE("3x3 grid") {
  const auto rows = rows_of({-4, -3, -4.5, -3.5, 3, 2});
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    REQUIRE(r.size() == 8);
    const double p = std::stod(r[0]);
    const double q = std::stod(r[1]);
    CHECK(r[6] == (p < q ? "simplex" : p > q ? "two-point" : "tie"));
  }
  // q outer, p fastest
  CHECK(std::stod(rows[0][0]) == -4.0);
  CHECK(std::stod(rows[1][0]) == -3.5);
  CHECK(std::stod(rows[0][1]) == std::stod(rows[2][1]));
}

TEST_CASE("one-dimensional grid is constant") {
  for (const auto& r : rows_of({-3, -1, -3, -1, 5, 1})) {
    CHECK(r[6] == "constant");
    const double p = std::stod(r[0]);
    const double q = std::stod(r[1]);
    if (p != q) CHECK(std::stod(r[4]) == Approx(std::pow(2.0, 1 / q - 1 / p)).epsilon(1e-14));
  }
}

TEST_CASE("winner flips at the threshold") {
  const double q = -1.5;
  const double thr = threshold_p(q);
  const int steps = 81;
  const double pmin = -4.0;
  const double pmax = -2.0;
  const double step = (pmax - pmin) / (steps - 1);
  int flips = 0;
  std::string prev;
  double flip_at = 0.0;
  for (const auto& r : rows_of({pmin, pmax, q, q, steps, 2})) {
    if (std::stod(r[1]) != q) continue;
    if (!prev.empty() && r[6] != prev) {
      ++flips;
      flip_at = std::stod(r[0]);
    }
    prev = r[6];
    if (std::stod(r[0]) == pmax) break;
  }
  CHECK(flips == 1);
  CHECK(std::abs(flip_at - thr) <= step);
}

TEST_CASE("row format") {
  const auto s = sample_region(-4, -1.5, 3);
  const auto row = split(format_region_row(s));
  REQUIRE(row.size() == 8);
  CHECK(row[3].empty());
  CHECK(std::stod(row[4]) == s.ratio_simplex);
}

TEST_CASE("grid validation") {
  std::ostringstream out;
  CHECK_THROWS_AS(emit_grid(out, {-4, -3, -4, -3, 0, 2}), DomainError);
  CHECK_THROWS_AS(emit_grid(out, {-3, -4, -4, -3, 3, 2}), DomainError);
}
