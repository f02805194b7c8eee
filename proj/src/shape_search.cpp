#include "riesz/shape_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "detail/nelder_mead.hpp"
#include "riesz/errors.hpp"
#include "riesz/finite_capacity.hpp"

namespace riesz {

namespace {

constexpr int kAnnealRounds = 10;
constexpr double kScaleStart = 0.3;
constexpr double kScaleEnd = 1e-5;

Configuration unflatten(const Eigen::VectorXd& x, int k, int n) {
  Eigen::MatrixXd rows(k, n);
  for (int i = 0; i < k; ++i) rows.row(i) = x.segment(static_cast<Eigen::Index>(i) * n, n).transpose();
  return Configuration(std::move(rows));
}

Eigen::VectorXd flatten(const Configuration& config) {
  const auto& c = config.coordinates();
  Eigen::VectorXd x(c.size());
  for (Eigen::Index i = 0; i < c.rows(); ++i) x.segment(i * c.cols(), c.cols()) = c.row(i).transpose();
  return x;
}

std::vector<std::vector<std::size_t>> supports_of(const CapacityResult& r) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& m : r.measures) out.push_back(m.measure.support);
  return out;
}

RestartTrace run_restart(const SearchProblem& problem, int restart, Eigen::VectorXd& best_x) {
  std::seed_seq seq{static_cast<std::uint32_t>(problem.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(problem.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::bernoulli_distribution flip(0.5);

  const int k = problem.k;
  const int n = problem.n;
  const int dim = k * n;

  RestartTrace trace;
  trace.restart = restart;
  int evaluations = 0;
  double best_ratio = -std::numeric_limits<double>::infinity();

  auto objective = [&](const Eigen::VectorXd& x) {
    ++evaluations;
    const double ratio = capacity_ratio(unflatten(x, k, n), problem.p, problem.q);
    if (!std::isfinite(ratio)) return std::numeric_limits<double>::infinity();
    return -ratio;
  };

  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x(i) = coord(rng);
  if (unflatten(x, k, n).diameter() > 0.0) x = flatten(normalize_diameter(unflatten(x, k, n)));
  double fx = objective(x);
  if (std::isfinite(fx)) {
    best_ratio = -fx;
    trace.points.push_back({evaluations, best_ratio});
  }

  const int per_round = std::max(dim + 2, problem.iterations / kAnnealRounds);
  for (int round = 0; round < kAnnealRounds; ++round) {
    const double frac = static_cast<double>(round) / (kAnnealRounds - 1);
    const double scale = kScaleStart * std::pow(kScaleEnd / kScaleStart, frac);
    std::vector<Eigen::VectorXd> simplex{x};
    for (int i = 0; i < dim; ++i) {
      Eigen::VectorXd v = x;
      v(i) += flip(rng) ? scale : -scale;
      simplex.push_back(std::move(v));
    }
    auto nm = detail::nelder_mead(objective, std::move(simplex), per_round);
    if (nm.value <= fx) {
      x = nm.x;
      fx = nm.value;
    }
    if (std::isfinite(fx)) {
      const Configuration c = unflatten(x, k, n);
      if (c.diameter() > 0.0) x = flatten(normalize_diameter(c));
      best_ratio = -fx;
      trace.points.push_back({evaluations, best_ratio});
    }
  }
  trace.best_ratio = best_ratio;
  best_x = x;
  return trace;
}

}  // namespace

void SearchProblem::validate() const {
  if (n < 1) throw DomainError("optimize: dimension must be >= 1");
  if (k < 2) throw DomainError("optimize: need at least two points");
  if (!(p < 0.0) || !(q < 0.0) || p == q) {
    throw DomainError("optimize: need distinct negative exponents p and q");
  }
  if (restarts < 1 || iterations < 1) {
    throw DomainError("optimize: restarts and iterations must be positive");
  }
}

Configuration normalize_diameter(const Configuration& config) {
  const double diam = config.diameter();
  if (!(diam > 0.0)) throw DegenerateConfiguration("normalize_diameter: zero diameter");
  const Eigen::RowVectorXd centroid = config.coordinates().colwise().mean();
  return Configuration((config.coordinates().rowwise() - centroid) / diam);
}

Configuration merge_coincident(const Configuration& config, double rel_tol) {
  const double cutoff = rel_tol * config.diameter();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const bool duplicate = std::any_of(keep.begin(), keep.end(), [&](std::size_t j) {
      return config.distance(i, j) <= cutoff;
    });
    if (!duplicate) keep.push_back(i);
  }
  return config.subset(keep);
}

double capacity_ratio(const Configuration& config, double p, double q) {
  const Configuration merged = merge_coincident(config);
  if (merged.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  try {
    return finite_capacity(merged, q).capacity / finite_capacity(merged, p).capacity;
  } catch (const DegenerateConfiguration&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

Classification classify_configuration(const Configuration& config, double p, double q,
                                      double tol) {
  Classification out;
  const Configuration merged = merge_coincident(config);
  out.merged_count = merged.size();
  if (merged.size() < 2) {
    out.label = "other";
    return out;
  }
  const CapacityResult at_p = finite_capacity(merged, p);
  const CapacityResult at_q = finite_capacity(merged, q);
  out.p_supports = supports_of(at_p);
  out.q_supports = supports_of(at_q);

  if (!at_p.unique || !at_q.unique) {
    out.label = "other";
    return out;
  }
  const auto& support = out.q_supports.front();
  if (support.size() == 2) {
    out.label = "two-point";
    return out;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const double d = merged.distance(support[i], support[j]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  out.label = (hi - lo <= tol * hi) ? "regular-simplex-" + std::to_string(support.size()) : "other";
  return out;
}

SearchResult optimize_ratio(const SearchProblem& problem) {
  problem.validate();
  const auto restarts = static_cast<std::size_t>(problem.restarts);
  std::vector<RestartTrace> traces(restarts);
  std::vector<Eigen::VectorXd> finals(restarts);

  const unsigned threads = std::min<std::size_t>(
      problem.threads ? problem.threads : default_thread_count(), restarts);
  auto work = [&](unsigned tid) {
    for (std::size_t r = tid; r < restarts; r += threads) {
      traces[r] = run_restart(problem, static_cast<int>(r), finals[r]);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
  }

  SearchResult result;
  int best = -1;
  for (std::size_t r = 0; r < restarts; ++r) {
    if (!std::isfinite(traces[r].best_ratio)) continue;
    if (best < 0 || traces[r].best_ratio > traces[static_cast<std::size_t>(best)].best_ratio) {
      best = static_cast<int>(r);
    }
  }
  if (best < 0) {
    throw SearchFailure("optimize: no restart produced a configuration with two distinct points");
  }
  result.best_restart = best;
  result.best = normalize_diameter(unflatten(finals[static_cast<std::size_t>(best)], problem.k, problem.n));
  result.ratio = capacity_ratio(result.best, problem.p, problem.q);
  result.traces = std::move(traces);
  result.classification = classify_configuration(result.best, problem.p, problem.q);
  return result;
}

}  // namespace riesz
