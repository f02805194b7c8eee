#include "detail/linear_program.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace riesz::detail {

namespace {

class Tableau {
public:
  // Rows 0..m-1 are constraints, row m is the (negated) objective.
  // Column `cols_` is the right-hand side.
  Tableau(Eigen::Index m, Eigen::Index cols) : t_(Eigen::MatrixXd::Zero(m + 1, cols + 1)), m_(m), cols_(cols), basis_(static_cast<std::size_t>(m), -1) {}

  Eigen::MatrixXd& data() { return t_; }
  std::vector<Eigen::Index>& basis() { return basis_; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index r = 0; r <= m_; ++r) {
      if (r != row && t_(r, col) != 0.0) t_.row(r) -= t_(r, col) * t_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Runs simplex iterations on the columns [0, allowed). Objective row holds
  // reduced costs r_j; a column may enter when r_j < -tol (we maximize).
  LpStatus iterate(Eigen::Index allowed, double tol) {
    for (int guard = 0; guard < 100000; ++guard) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (t_(m_, j) < -tol) { enter = j; break; }
      }
      if (enter < 0) return LpStatus::optimal;

      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < m_; ++r) {
        if (t_(r, enter) > tol) {
          const double ratio = t_(r, cols_) / t_(r, enter);
          if (ratio < best - tol ||
              (ratio <= best + tol && leave >= 0 && basis_[r] < basis_[leave])) {
            best = std::min(best, ratio);
            leave = r;
          }
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, enter);
    }
    return LpStatus::unbounded;
  }

private:
  Eigen::MatrixXd t_;
  Eigen::Index m_;
  Eigen::Index cols_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpResult solve_standard_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c, double tol) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  LpResult result;
  result.x = Eigen::VectorXd::Zero(n);

  // Phase I: artificial variable per row, rows flipped so that b >= 0.
  Tableau tab(m, n + m);
  auto& t = tab.data();
  for (Eigen::Index r = 0; r < m; ++r) {
    const double sign = b(r) < 0.0 ? -1.0 : 1.0;
    t.row(r).head(n) = sign * A.row(r);
    t(r, n + r) = 1.0;
    t(r, n + m) = sign * b(r);
    tab.basis()[static_cast<std::size_t>(r)] = n + r;
  }
  // maximize -sum(artificials): reduced costs are minus the column sums.
  for (Eigen::Index r = 0; r < m; ++r) t.row(m) -= t.row(r);
  for (Eigen::Index r = 0; r < m; ++r) t(m, n + r) = 0.0;

  tab.iterate(n + m, tol);
  const double scale = 1.0 + b.cwiseAbs().maxCoeff();
  // The right-hand side of the objective row is the phase I optimum, -sum(a).
  if (std::abs(t(m, n + m)) > 1e-9 * scale) {
    result.status = LpStatus::infeasible;
    return result;
  }

  // Drive remaining artificials out of the basis where possible.
  for (Eigen::Index r = 0; r < m; ++r) {
    if (tab.basis()[static_cast<std::size_t>(r)] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(t(r, j)) > 1e-9) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase II objective.
  t.row(m).setZero();
  t.row(m).head(n) = -c.transpose();
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index col = tab.basis()[static_cast<std::size_t>(r)];
    if (col < n && t(m, col) != 0.0) t.row(m) -= t(m, col) * t.row(r);
  }

  const LpStatus status = tab.iterate(n, tol);
  result.status = status;
  if (status != LpStatus::optimal) return result;

  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index col = tab.basis()[static_cast<std::size_t>(r)];
    if (col < n) result.x(col) = t(r, n + m);
  }
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace riesz::detail
