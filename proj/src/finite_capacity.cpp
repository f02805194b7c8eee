#include "riesz/finite_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "detail/linear_program.hpp"
#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kWeightTol = 1e-12;      // weights at or below this are "zero"
constexpr double kRankCutoff = 1e-10;     // relative singular-value cutoff
constexpr double kTieTol = 1e-10;         // relative energy tie tolerance
constexpr double kSameMeasureTol = 1e-9;  // L-infinity distance between measures
constexpr std::size_t kMaxSupports = 4'000'000;

Eigen::VectorXd embed(const Eigen::VectorXd& local, std::span<const std::size_t> support,
                      std::size_t k) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < support.size(); ++i) {
    full(static_cast<Eigen::Index>(support[i])) = local(static_cast<Eigen::Index>(i));
  }
  return full;
}

DiscreteMeasure clean_measure(Eigen::VectorXd w) {
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) <= kWeightTol) w(i) = 0.0;
  }
  w /= w.sum();
  return DiscreteMeasure::from_weights(std::move(w));
}

// Point of the affine family base + span(directions) that maximizes its
// smallest coordinate, or nothing if that coordinate cannot be made positive.
std::optional<Eigen::VectorXd> positive_family_member(const Eigen::VectorXd& base,
                                                      const Eigen::MatrixXd& directions) {
  const Eigen::Index m = base.size();
  const Eigen::Index d = directions.cols();
  // Columns: alpha+ (d), alpha- (d), tau+, tau-, slacks (m), tau slack.
  const Eigen::Index cols = 2 * d + 2 + m + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m + 1, cols);
  Eigen::VectorXd b(m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    A.row(i).segment(0, d) = -directions.row(i);
    A.row(i).segment(d, d) = directions.row(i);
    A(i, 2 * d) = 1.0;
    A(i, 2 * d + 1) = -1.0;
    A(i, 2 * d + 2 + i) = 1.0;
    b(i) = base(i);
  }
  A(m, 2 * d) = 1.0;
  A(m, cols - 1) = 1.0;
  b(m) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cols);
  c(2 * d) = 1.0;
  c(2 * d + 1) = -1.0;

  const auto lp = detail::solve_standard_form(A, b, c);
  if (lp.status != detail::LpStatus::optimal || lp.objective <= kWeightTol) return std::nullopt;
  const Eigen::VectorXd alpha = lp.x.segment(0, d) - lp.x.segment(d, d);
  return Eigen::VectorXd(base + directions * alpha);
}

std::pair<DiscreteMeasure, DiscreteMeasure> segment_endpoints(const Eigen::VectorXd& point,
                                                              const Eigen::VectorXd& dir) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < point.size(); ++i) {
    if (std::abs(dir(i)) <= 1e-14) continue;
    const double step = -point(i) / dir(i);
    if (dir(i) > 0.0) {
      lo = std::max(lo, step);
    } else {
      hi = std::min(hi, step);
    }
  }
  return {clean_measure(point + lo * dir), clean_measure(point + hi * dir)};
}

// Iterates all subsets of {0..n-1} with sizes in [lo, hi] in canonical
// order (by size, then lexicographically).
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t lo, std::size_t hi, Fn&& fn) {
  std::vector<std::size_t> idx;
  for (std::size_t size = lo; size <= std::min(hi, n); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      fn(std::span<const std::size_t>(idx));
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

double binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0.0;
  double value = 1.0;
  for (std::size_t i = 1; i <= r; ++i) {
    value *= static_cast<double>(n - r + i) / static_cast<double>(i);
  }
  return value;
}

bool same_measure(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  return (a.weights - b.weights).cwiseAbs().maxCoeff() < kSameMeasureTol;
}

void require_negative_p(double p, const char* what) {
  if (!std::isfinite(p) || !(p < 0.0)) {
    throw DomainError(std::string(what) + ": requires finite p < 0, got " + std::to_string(p));
  }
}

}  // namespace

DiscreteMeasure DiscreteMeasure::from_weights(Eigen::VectorXd weights, double zero_tol) {
  DiscreteMeasure measure;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights(i) <= zero_tol) weights(i) = 0.0;
    if (weights(i) > 0.0) measure.support.push_back(static_cast<std::size_t>(i));
  }
  measure.weights = std::move(weights);
  return measure;
}

unsigned default_thread_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RIESZ_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && requested > 0) return std::min(hw, static_cast<unsigned>(requested));
  }
  return hw;
}

KernelMatrix kernel_matrix(const Configuration& config, double p) {
  require_negative_p(p, "kernel_matrix");
  const std::size_t k = config.size();
  const double t = -p;
  const double min_sep = 1e-12 * config.diameter();
  KernelMatrix kernel{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)), t};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double d = config.distance(i, j);
      if (d <= min_sep) {
        throw DegenerateConfiguration("points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
      }
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      kernel.entries(a, b) = kernel.entries(b, a) = std::pow(d, t);
    }
  }
  return kernel;
}

std::vector<SupportCritical> critical_point_on_support(const KernelMatrix& kernel,
                                                       std::span<const std::size_t> support) {
  const auto m = static_cast<Eigen::Index>(support.size());
  if (m < 2) throw DomainError("critical_point_on_support: support needs at least two points");

  Eigen::MatrixXd q(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      q(i, j) = kernel.entries(static_cast<Eigen::Index>(support[static_cast<std::size_t>(i)]),
                               static_cast<Eigen::Index>(support[static_cast<std::size_t>(j)]));
    }
  }
  // Normalizing Q keeps the border of ones on the same scale as the kernel.
  const double scale = q.maxCoeff();
  if (!(scale > 0.0)) return {};

  // Bordered first-order system [Q 1; 1^T 0] (w, mu) = (0, 1); lambda/2 = -mu.
  Eigen::MatrixXd bordered = Eigen::MatrixXd::Zero(m + 1, m + 1);
  bordered.topLeftCorner(m, m) = q / scale;
  bordered.col(m).head(m).setOnes();
  bordered.row(m).head(m).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = 1.0;

  SupportCritical out;
  Eigen::VectorXd weights;
  Eigen::MatrixXd null_dirs(m, 0);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(bordered);
  if (lu.rcond() > 1e-8) {
    weights = lu.solve(rhs).head(m);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(bordered);
    const Eigen::VectorXd& vals = eig.eigenvalues();
    const Eigen::MatrixXd& vecs = eig.eigenvectors();
    const double top = vals.cwiseAbs().maxCoeff();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m + 1);
    std::vector<Eigen::Index> null_cols;
    for (Eigen::Index i = 0; i <= m; ++i) {
      const double mag = std::abs(vals(i));
      if (mag > 1e-12 * top && mag < 1e-8 * top) out.rank_ambiguous = true;
      if (mag <= kRankCutoff * top) {
        null_cols.push_back(i);
      } else {
        x += vecs.col(i) * (vecs.col(i).dot(rhs) / vals(i));
      }
    }
    if ((bordered * x - rhs).norm() > 1e-8) return {};  // inconsistent system
    weights = x.head(m);
    if (!null_cols.empty()) {
      Eigen::MatrixXd raw(m, static_cast<Eigen::Index>(null_cols.size()));
      for (std::size_t c = 0; c < null_cols.size(); ++c) {
        raw.col(static_cast<Eigen::Index>(c)) = vecs.col(null_cols[c]).head(m);
      }
      // Orthonormal basis of the weight parts.
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
      null_dirs = qr.householderQ() * Eigen::MatrixXd::Identity(m, raw.cols());
    }
  }

  if (null_dirs.cols() == 0) {
    if ((weights.array() <= kWeightTol).any()) return {};
  } else {
    auto member = positive_family_member(weights, null_dirs);
    if (!member) return {};
    weights = *member;
    for (Eigen::Index c = 0; c < null_dirs.cols(); ++c) {
      out.family_directions.push_back(embed(null_dirs.col(c), support, kernel.size()));
    }
  }

  weights /= weights.sum();
  out.measure = DiscreteMeasure::from_weights(embed(weights, support, kernel.size()));
  out.energy = weights.dot(q * weights);
  if (out.family_directions.size() == 1) {
    out.family_endpoints = segment_endpoints(out.measure.weights, out.family_directions.front());
  }
  return {std::move(out)};
}

std::vector<std::size_t> extreme_point_indices(const Configuration& config) {
  const std::size_t k = config.size();
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  if (k <= 2) return all;

  const auto& x = config.coordinates();
  const int n = config.dimension();
  if (n == 1) {
    Eigen::Index lo = 0;
    Eigen::Index hi = 0;
    x.col(0).minCoeff(&lo);
    x.col(0).maxCoeff(&hi);
    std::vector<std::size_t> ends{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    return ends;
  }

  if (n == 2) {
    // Andrew's monotone chain; collinear boundary points are dropped.
    std::sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      return x(ia, 0) < x(ib, 0) || (x(ia, 0) == x(ib, 0) && x(ia, 1) < x(ib, 1));
    });
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
      const auto io = static_cast<Eigen::Index>(o);
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      return (x(ia, 0) - x(io, 0)) * (x(ib, 1) - x(io, 1)) -
             (x(ia, 1) - x(io, 1)) * (x(ib, 0) - x(io, 0));
    };
    std::vector<std::size_t> hull(2 * k);
    std::size_t h = 0;
    for (std::size_t i = 0; i < k; ++i) {
      while (h >= 2 && cross(hull[h - 2], hull[h - 1], all[i]) <= 0.0) --h;
      hull[h++] = all[i];
    }
    for (std::size_t i = k - 1, lower = h + 1; i-- > 0;) {
      while (h >= lower && cross(hull[h - 2], hull[h - 1], all[i]) <= 0.0) --h;
      hull[h++] = all[i];
    }
    hull.resize(h - 1);
    std::sort(hull.begin(), hull.end());
    hull.erase(std::unique(hull.begin(), hull.end()), hull.end());
    return hull;
  }

  // General dimension: x_i is extreme iff it is not a convex combination of
  // the other points (linear feasibility).
  const double diam = config.diameter();
  const Eigen::RowVectorXd centroid = x.colwise().mean();
  const Eigen::MatrixXd y = (x.rowwise() - centroid) / (diam > 0.0 ? diam : 1.0);
  std::vector<std::size_t> extreme;
  for (std::size_t i = 0; i < k; ++i) {
    Eigen::MatrixXd A(n + 1, static_cast<Eigen::Index>(k - 1));
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      A.col(col).head(n) = y.row(static_cast<Eigen::Index>(j)).transpose();
      A(n, col) = 1.0;
      ++col;
    }
    Eigen::VectorXd b(n + 1);
    b.head(n) = y.row(static_cast<Eigen::Index>(i)).transpose();
    b(n) = 1.0;
    const auto lp = detail::solve_standard_form(A, b, Eigen::VectorXd::Zero(A.cols()));
    if (lp.status == detail::LpStatus::infeasible) extreme.push_back(i);
  }
  return extreme;
}

Configuration bjorck_reduce(const Configuration& config, double p) {
  if (!(p < -2.0)) throw DomainError("bjorck_reduce: requires p < -2");
  const auto keep = extreme_point_indices(config);
  return config.subset(keep);
}

KktReport kkt_certificate(const KernelMatrix& kernel, const DiscreteMeasure& measure,
                          double rel_tol) {
  KktReport report;
  report.potentials = kernel.entries * measure.weights;
  report.value = measure.weights.dot(report.potentials);
  const double v = report.value;
  const double tol = rel_tol * std::abs(v);
  const double denom = v > 0.0 ? v : 1.0;

  std::vector<bool> on_support(kernel.size(), false);
  for (std::size_t i : measure.support) on_support[i] = true;

  bool ok = !measure.support.empty();
  double worst = 0.0;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const double u = report.potentials(static_cast<Eigen::Index>(i));
    const double violation = on_support[i] ? std::abs(u - v) : u - v;
    worst = std::max(worst, violation / denom);
    if (violation > tol) ok = false;
  }
  report.certified = ok;
  report.max_violation = worst;
  return report;
}

CapacityResult finite_capacity(const Configuration& config, double p,
                               const CapacityOptions& options) {
  require_negative_p(p, "finite_capacity");
  CapacityResult result;
  result.p = p;
  const std::size_t k = config.size();
  if (k == 0) return result;
  if (k == 1) {
    SupportCritical point_mass;
    point_mass.measure = DiscreteMeasure::from_weights(Eigen::VectorXd::Ones(1));
    result.measures.push_back(std::move(point_mass));
    result.unique = true;
    return result;
  }

  const KernelMatrix kernel = kernel_matrix(config, p);

  std::vector<std::size_t> candidates(k);
  for (std::size_t i = 0; i < k; ++i) candidates[i] = i;
  std::size_t max_support = k;
  if (p < -2.0 && options.reduce) {
    candidates = extreme_point_indices(config);
    max_support = static_cast<std::size_t>(config.affine_dimension()) + 1;
  } else if (k > options.max_points) {
    throw ResourceLimit("finite_capacity: " + std::to_string(k) +
                        " points exceed the enumeration limit of " +
                        std::to_string(options.max_points) +
                        " (only p < -2 admits the extreme-point reduction)");
  }

  double count = 0.0;
  for (std::size_t s = 2; s <= std::min(max_support, candidates.size()); ++s) {
    count += binomial(candidates.size(), s);
  }
  if (count > static_cast<double>(kMaxSupports)) {
    throw ResourceLimit("finite_capacity: " + std::to_string(static_cast<long long>(count)) +
                        " candidate supports exceed the enumeration budget");
  }

  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(static_cast<std::size_t>(count));
  for_each_combination(candidates.size(), 2, max_support, [&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> s(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) s[i] = candidates[idx[i]];
    supports.push_back(std::move(s));
  });

  std::vector<std::vector<SupportCritical>> found(supports.size());
  const unsigned threads = std::min<std::size_t>(
      options.threads ? options.threads : default_thread_count(),
      std::max<std::size_t>(1, supports.size() / 2048));
  auto work = [&](unsigned tid) {
    for (std::size_t i = tid; i < supports.size(); i += threads) {
      found[i] = critical_point_on_support(kernel, supports[i]);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
  }

  double best = 0.0;
  for (const auto& f : found) {
    for (const auto& c : f) best = std::max(best, c.energy);
  }
  for (auto& f : found) {
    for (auto& c : f) {
      if (c.energy < best * (1.0 - kTieTol)) continue;
      result.rank_ambiguous = result.rank_ambiguous || c.rank_ambiguous;
      const bool seen = std::any_of(result.measures.begin(), result.measures.end(),
                                    [&](const SupportCritical& other) {
                                      return same_measure(other.measure, c.measure);
                                    });
      if (seen) continue;
      result.family_dimension =
          std::max(result.family_dimension, static_cast<int>(c.family_directions.size()));
      result.measures.push_back(std::move(c));
    }
  }
  result.energy = best;
  result.capacity = std::pow(best, -1.0 / p);
  result.unique = result.measures.size() == 1 && result.family_dimension == 0;
  return result;
}

}  // namespace riesz
