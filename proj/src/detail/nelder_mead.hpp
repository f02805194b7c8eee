#ifndef RIESZ_DETAIL_NELDER_MEAD_HPP
#define RIESZ_DETAIL_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace riesz::detail {

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
};

// Plain Nelder-Mead minimization (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) from a caller-supplied initial simplex. Stops when the budget is
// spent or the spread of simplex values falls below `ftol`. Objective values
// of +inf are allowed and simply lose every comparison.
inline NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                    std::vector<Eigen::VectorXd> simplex, int max_evals,
                                    double ftol = 1e-15) {
  const std::size_t dim = simplex.size() - 1;
  std::vector<double> values(simplex.size());
  int evals = 0;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    values[i] = f(simplex[i]);
    ++evals;
  }
  std::vector<std::size_t> order(simplex.size());

  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];
    if (std::isfinite(values[worst]) && values[worst] - values[best] <= ftol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(simplex[0].size());
    for (std::size_t i : order) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(dim);

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double fr = f(reflected);
    ++evals;
    if (fr < values[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = f(expanded);
      ++evals;
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = f(contracted);
    ++evals;
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
      ++evals;
    }
  }

  const auto it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(it - values.begin());
  return {simplex[idx], *it, evals};
}

}  // namespace riesz::detail

#endif  // RIESZ_DETAIL_NELDER_MEAD_HPP
