#include "crn/lp.hpp"

#include <cmath>
#include <vector>

namespace crn::lp {

namespace {
constexpr double kPivotTol = 1e-11;
}

Result solveFeasibility(const Problem& p, double feasTol, int maxIter) {
  const int m = static_cast<int>(p.A.rows());
  const int n = static_cast<int>(p.A.cols());

  // Shift bounded variables to x = lower + u, split free variables into
  // u+ - u-. Columns: one per bounded var, two per free var.
  std::vector<int> colVar;      // original variable of each column
  std::vector<double> colSign;  // +1 or -1
  for (int j = 0; j < n; ++j) {
    colVar.push_back(j);
    colSign.push_back(1.0);
    if (!std::isfinite(p.lower(j))) {
      colVar.push_back(j);
      colSign.push_back(-1.0);
    }
  }
  const int N = static_cast<int>(colVar.size());

  Eigen::VectorXd b = p.b;
  for (int j = 0; j < n; ++j)
    if (std::isfinite(p.lower(j))) b -= p.A.col(j) * p.lower(j);

  // Tableau: [cols | artificials | rhs], rhs made non-negative.
  Eigen::MatrixXd T(m, N + m + 1);
  for (int c = 0; c < N; ++c) T.col(c) = p.A.col(colVar[c]) * colSign[c];
  T.middleCols(N, m) = Eigen::MatrixXd::Identity(m, m);
  T.col(N + m) = b;
  for (int i = 0; i < m; ++i)
    if (T(i, N + m) < 0) T.row(i) = -T.row(i);
  T.middleCols(N, m) = Eigen::MatrixXd::Identity(m, m);

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = N + i;

  // Phase-1 reduced costs: c = (0,...,0,1,...,1); row r_j = sum_i T(i,j) for
  // structural columns, 0 for artificial columns, objective = sum rhs.
  Eigen::VectorXd red = Eigen::VectorXd::Zero(N + m);
  for (int j = 0; j < N; ++j) red(j) = T.col(j).sum();
  double obj = T.col(N + m).sum();

  for (int iter = 0; iter < maxIter; ++iter) {
    // Bland: smallest-index column with positive reduced cost.
    int enter = -1;
    for (int j = 0; j < N + m; ++j)
      if (red(j) > kPivotTol) { enter = j; break; }
    if (enter == -1) break;  // optimal

    int leave = -1;
    double bestRatio = 0;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > kPivotTol) {
        double ratio = T(i, N + m) / T(i, enter);
        if (leave == -1 || ratio < bestRatio - 1e-15 ||
            (std::abs(ratio - bestRatio) <= 1e-15 && basis[i] < basis[leave])) {
          leave = i;
          bestRatio = ratio;
        }
      }
    }
    if (leave == -1) break;  // phase-1 cannot be unbounded; numerical stop

    double piv = T(leave, enter);
    T.row(leave) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
    double f = red(enter);
    red -= f * T.row(leave).head(N + m);
    obj -= f * T(leave, N + m);
    basis[leave] = enter;
  }

  Result res;
  res.infeasibility = std::max(0.0, obj);

  Eigen::VectorXd u = Eigen::VectorXd::Zero(N);
  for (int i = 0; i < m; ++i)
    if (basis[i] < N) u(basis[i]) = T(i, N + m);

  Eigen::VectorXd x(n);
  for (int j = 0; j < n; ++j)
    x(j) = std::isfinite(p.lower(j)) ? p.lower(j) : 0.0;
  for (int c = 0; c < N; ++c) x(colVar[c]) += colSign[c] * u(c);
  res.x = x;

  // Optimality was reached if no positive reduced cost remains.
  bool optimal = true;
  for (int j = 0; j < N + m; ++j)
    if (red(j) > kPivotTol) { optimal = false; break; }

  if (!optimal)
    res.status = Status::IterationLimit;
  else if (res.infeasibility <= feasTol)
    res.status = Status::Feasible;
  else
    res.status = Status::Infeasible;
  return res;
}

}  // namespace crn::lp
