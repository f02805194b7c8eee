#include "cli.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "riesz/errors.hpp"
#include "riesz/finite_capacity.hpp"
#include "riesz/region_map.hpp"
#include "riesz/serialization.hpp"
#include "riesz/shape_search.hpp"
#include "riesz/triangle.hpp"

namespace riesz::cli {

namespace {

// Writes to --output when given, otherwise to the stream passed to run().
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::out | std::ios::trunc);
    if (!file_) throw IoError("cannot open output file '" + path + "'");
    target_ = &file_;
  }
  std::ostream& stream() { return *target_; }

private:
  std::ofstream file_;
  std::ostream* target_;
};

void emit_json(const nlohmann::json& doc, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  sink.stream() << doc.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riesz capacities of finite sets, triangles and ratio shape search", "riesz"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

  std::string points_path;
  double p = 0.0;
  double q = 0.0;

  auto* capacity = app.add_subcommand("capacity", "Capacity and equilibrium measures of a point file");
  capacity->add_option("--points", points_path, "Point file, one point per line")->required();
  capacity->add_option("--p", p, "Riesz exponent (p < 0)")->required();
  std::size_t max_points = CapacityOptions{}.max_points;
  bool no_reduce = false;
  capacity->add_option("--max-points", max_points, "Enumeration limit without reduction");
  capacity->add_flag("--no-reduce", no_reduce, "Skip the extreme-point reduction");

  auto* triangle = app.add_subcommand("triangle", "Closed-form capacity of a three-point set");
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  triangle->add_option("--a", a, "Side length")->required();
  triangle->add_option("--b", b, "Side length")->required();
  triangle->add_option("--c", c, "Side length")->required();
  triangle->add_option("--p", p, "Riesz exponent (p < 0)")->required();

  auto* ratio = app.add_subcommand("ratio", "cap_q / cap_p of a point file");
  ratio->add_option("--points", points_path, "Point file")->required();
  ratio->add_option("--p", p, "Exponent in the denominator")->required();
  ratio->add_option("--q", q, "Exponent in the numerator")->required();

  auto* optimize = app.add_subcommand("optimize", "Maximize cap_q / cap_p over k-point sets");
  SearchProblem problem;
  optimize->add_option("--n", problem.n, "Ambient dimension")->required();
  optimize->add_option("--k", problem.k, "Number of points")->required();
  optimize->add_option("--p", problem.p)->required();
  optimize->add_option("--q", problem.q)->required();
  optimize->add_option("--seed", problem.seed, "Random seed")->required();
  optimize->add_option("--restarts", problem.restarts, "Random restarts")->capture_default_str();
  optimize->add_option("--iters", problem.iterations, "Objective evaluations per restart")->capture_default_str();

  auto* region = app.add_subcommand("region-map", "CSV of candidate ratios over a (p, q) grid");
  GridSpec grid;
  region->add_option("--pmin", grid.pmin)->required();
  region->add_option("--pmax", grid.pmax)->required();
  region->add_option("--qmin", grid.qmin)->required();
  region->add_option("--qmax", grid.qmax)->required();
  region->add_option("--steps", grid.steps)->required();
  region->add_option("--n", grid.n)->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance suites");
  std::string suite;
  verify->add_option("--suite", suite, "Run only this suite")
      ->check(CLI::IsMember(acceptance::suite_names()));

  std::vector<std::string> argv_store{"riesz"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*capacity) {
      const Configuration config = read_points_file(points_path);
      CapacityOptions options;
      options.max_points = max_points;
      options.reduce = !no_reduce;
      emit_json(to_json(finite_capacity(config, p, options)), output, out);
    } else if (*triangle) {
      const TriangleShape shape = TriangleShape::from_sides(a, b, c);
      emit_json(to_json(triangle_capacity(shape, p), shape, p), output, out);
    } else if (*ratio) {
      const Configuration config = read_points_file(points_path);
      const double cap_p = finite_capacity(config, p).capacity;
      const double cap_q = finite_capacity(config, q).capacity;
      nlohmann::json doc = {{"p", p}, {"q", q}, {"cap_p", cap_p}, {"cap_q", cap_q},
                            {"ratio", cap_q / cap_p}};
      emit_json(doc, output, out);
    } else if (*optimize) {
      emit_json(to_json(optimize_ratio(problem), problem), output, out);
    } else if (*region) {
      Sink sink(output, out);
      emit_grid(sink.stream(), grid);
    } else if (*verify) {
      const std::vector<std::string> names =
          suite.empty() ? acceptance::suite_names() : std::vector<std::string>{suite};
      Sink sink(output, out);
      int failures = 0;
      for (const auto& name : names) {
        const auto outcome = acceptance::run_suite(name);
        sink.stream() << acceptance::format_outcome(outcome) << std::endl;
        if (!outcome.passed) ++failures;
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace riesz::cli
