#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace riesz::oracle {

double exchange_ascent(const Eigen::MatrixXd& Q, Eigen::VectorXd w) {
  const Eigen::Index k = w.size();
  Eigen::VectorXd u = Q * w;
  for (int sweep = 0; sweep < 100000; ++sweep) {
    double gain_total = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        if (i == j) continue;
        // f(w + s(e_i - e_j)) = f + 2 s (u_i - u_j) - 2 s^2 Q_ij  (zero diagonal)
        const double qij = Q(i, j);
        double s = (u(i) - u(j)) / (2.0 * qij);
        s = std::clamp(s, -w(i), w(j));
        if (s == 0.0) continue;
        const double gain = 2.0 * s * (u(i) - u(j)) - 2.0 * s * s * qij;
        if (gain <= 0.0) continue;
        w(i) += s;
        w(j) -= s;
        u += s * (Q.col(i) - Q.col(j));
        gain_total += gain;
      }
    }
    if (gain_total < 1e-15) break;
  }
  return w.dot(Q * w);
}

double simplex_grid_max(const Eigen::MatrixXd& Q, int denominator, int refine_starts) {
  const Eigen::Index k = Q.rows();
  if (k == 1) return 0.0;
  std::vector<std::pair<double, Eigen::VectorXd>> top;
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(k);

  auto record = [&]() {
    const Eigen::VectorXd w = counts.cast<double>() / denominator;
    const double f = w.dot(Q * w);
    if (static_cast<int>(top.size()) < refine_starts || f > top.back().first) {
      top.emplace_back(f, w);
      std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      if (static_cast<int>(top.size()) > refine_starts) top.pop_back();
    }
  };
  auto enumerate = [&](auto&& self, Eigen::Index slot, int remaining) -> void {
    if (slot == k - 1) {
      counts(slot) = remaining;
      record();
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts(slot) = c;
      self(self, slot + 1, remaining - c);
    }
  };
  enumerate(enumerate, 0, denominator);

  double best = 0.0;
  for (auto& [f, w] : top) best = std::max({best, f, exchange_ascent(Q, w)});
  return best;
}

double elliptic_k_quadrature(double k) {
  // 10-point Gauss-Legendre on 400 panels of [0, pi/2].
  static const double x[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                              0.8650633666889845, 0.9739065285171717};
  static const double w[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                              0.1494513491505806, 0.0666713443086881};
  const int panels = 400;
  const double h = std::numbers::pi / 2.0 / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < 5; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        const double th = mid + sgn * x[i] * h / 2.0;
        const double s = std::sin(th);
        sum += w[i] * h / 2.0 / std::sqrt(1.0 - k * k * s * s);
      }
    }
  }
  return sum;
}

double libm_gamma(double x) { return std::tgamma(x); }

}  // namespace riesz::oracle
