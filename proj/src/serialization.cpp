#include "riesz/serialization.hpp"

namespace riesz {

namespace {

nlohmann::json vector_json(const Eigen::VectorXd& v) {
  return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

nlohmann::json measure_json(const DiscreteMeasure& m) {
  return {{"weights", vector_json(m.weights)}, {"support", m.support}};
}

nlohmann::json points_json(const Configuration& config) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Eigen::RowVectorXd pt = config.point(i);
    rows.push_back(std::vector<double>(pt.data(), pt.data() + pt.size()));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const CapacityResult& result) {
  nlohmann::json measures = nlohmann::json::array();
  for (const auto& c : result.measures) {
    nlohmann::json m = measure_json(c.measure);
    m["energy"] = c.energy;
    if (!c.family_directions.empty()) {
      nlohmann::json dirs = nlohmann::json::array();
      for (const auto& d : c.family_directions) dirs.push_back(vector_json(d));
      m["family_directions"] = std::move(dirs);
    }
    if (c.family_endpoints) {
      m["family_endpoints"] = {measure_json(c.family_endpoints->first),
                               measure_json(c.family_endpoints->second)};
    }
    measures.push_back(std::move(m));
  }
  return {{"energy", result.energy},
          {"capacity", result.capacity},
          {"p", result.p},
          {"measures", std::move(measures)},
          {"unique", result.unique},
          {"family_dimension", result.family_dimension},
          {"rank_ambiguous", result.rank_ambiguous}};
}

nlohmann::json to_json(const TriangleCapacity& result, const TriangleShape& shape, double p) {
  const auto& eq = result.equilibrium;
  nlohmann::json support = nlohmann::json::array({"x", "y"});
  if (eq.interior) support.push_back("z");
  return {{"a", shape.a},
          {"b", shape.b},
          {"c", shape.c},
          {"p", p},
          {"capacity", result.capacity},
          {"energy", eq.energy},
          {"weights", {eq.x, eq.y, eq.z}},
          {"support", std::move(support)},
          {"branch", eq.interior ? "interior" : "longest-side"}};
}

nlohmann::json to_json(const SearchResult& result, const SearchProblem& problem) {
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& t : result.traces) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : t.points) points.push_back({pt.iteration, pt.ratio});
    traces.push_back({{"restart", t.restart}, {"best_ratio", t.best_ratio}, {"trace", std::move(points)}});
  }
  const auto& cls = result.classification;
  return {{"problem",
           {{"n", problem.n},
            {"k", problem.k},
            {"p", problem.p},
            {"q", problem.q},
            {"restarts", problem.restarts},
            {"iterations", problem.iterations},
            {"seed", problem.seed}}},
          {"ratio", result.ratio},
          {"best_restart", result.best_restart},
          {"configuration", points_json(result.best)},
          {"diameter", result.best.diameter()},
          {"classification",
           {{"label", cls.label},
            {"merged_count", cls.merged_count},
            {"p_supports", cls.p_supports},
            {"q_supports", cls.q_supports}}},
          {"traces", std::move(traces)}};
}

}  // namespace riesz
