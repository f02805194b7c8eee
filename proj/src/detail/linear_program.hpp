#ifndef RIESZ_DETAIL_LINEAR_PROGRAM_HPP
#define RIESZ_DETAIL_LINEAR_PROGRAM_HPP

#include <Eigen/Dense>

namespace riesz::detail {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

// Dense two-phase simplex for
//
//   maximize c^T x   subject to   A x = b,  x >= 0.
//
// Bland's rule throughout, so it terminates on degenerate problems. Meant for
// the handful of tiny programs the capacity code needs (tens of variables).
LpResult solve_standard_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c, double tol = 1e-11);

}  // namespace riesz::detail

#endif  // RIESZ_DETAIL_LINEAR_PROGRAM_HPP
