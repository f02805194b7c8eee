#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using riesz::cli::run;
using doctest::Approx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_points(const std::string& name, const std::string& body) {
  const std::string path = "cli_test_" + name + ".txt";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("capacity subcommand") {
  const auto path = temp_points("tri", "0 0\n1 0\n0.5 0.8660254037844386\n");
  const auto r = call({"capacity", "--points", path, "--p", "-1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["capacity"].get<double>() == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(j["unique"].get<bool>());
  CHECK(j["measures"].size() == 1);
}

TEST_CASE("triangle subcommand") {
  const auto r = call({"triangle", "--a", "0.3", "--b", "0.4", "--c", "1", "--p", "-1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["capacity"].get<double>() == 0.5);
  CHECK(j["support"] == nlohmann::json::array({"x", "y"}));
}

TEST_CASE("ratio subcommand") {
  const auto path = temp_points("seg", "0\n0.4\n1\n");
  const auto r = call({"ratio", "--points", path, "--p", "-2", "--q", "-3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ratio"].get<double>() == Approx(std::pow(2.0, -1.0 / 3.0 + 0.5)).epsilon(1e-13));
}

TEST_CASE("optimize subcommand is reproducible") {
  const std::vector<std::string> args{"optimize", "--n", "2", "--k", "3", "--p", "-4", "--q", "-3",
                                      "--seed", "5", "--restarts", "3", "--iters", "600"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.contains("ratio"));
  CHECK(j["traces"].size() == 3);
}

TEST_CASE("optimize requires a seed") {
  const auto r = call({"optimize", "--n", "2", "--k", "3", "--p", "-4", "--q", "-3"});
  CHECK(r.code == 2);
}

TEST_CASE("region-map subcommand") {
  const auto r = call({"region-map", "--pmin", "-4", "--pmax", "-3", "--qmin", "-4.5", "--qmax",
                       "-3.5", "--steps", "3", "--n", "2"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 10);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_out.json";
  std::remove(path.c_str());
  const auto r = call({"--output", path, "triangle", "--a", "1", "--b", "1", "--c", "1", "--p", "-2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["capacity"].get<double>() == Approx(std::sqrt(2.0 / 3.0)));
}

TEST_CASE("verify one suite") {
  const auto r = call({"verify", "--suite", "kite"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
  CHECK(call({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("error codes") {
  const auto domain = call({"triangle", "--a", "2", "--b", "1", "--c", "1", "--p", "-1"});
  CHECK(domain.code == 0);  // sides are sorted first
  const auto bad_p = call({"triangle", "--a", "1", "--b", "1", "--c", "1", "--p", "1"});
  CHECK(bad_p.code == 1);
  CHECK(bad_p.err.rfind("error: domain_error: ", 0) == 0);

  const auto missing = call({"capacity", "--points", "/nonexistent.txt", "--p", "-1"});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: io_error: ", 0) == 0);

  const auto parse = call({"capacity", "--points", temp_points("bad", "0 0\n1 z\n"), "--p", "-1"});
  CHECK(parse.code == 1);
  CHECK(parse.err.rfind("error: parse_error: ", 0) == 0);

  const auto dup = call({"capacity", "--points", temp_points("dup", "0 0\n0 0\n1 1\n"), "--p", "-1"});
  CHECK(dup.code == 1);
  CHECK(dup.err.rfind("error: degenerate_configuration: ", 0) == 0);

  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"capacity", "--p", "-1"}).code == 2);
}
