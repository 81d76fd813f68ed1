#pragma once

#include <Eigen/Dense>
#include <limits>

namespace crn::lp {

/// Linear feasibility problem: find x with A x = b and x_i >= lower_i.
/// Set lower_i to -infinity for a free variable.
struct Problem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd lower;
};

enum class Status {
  Feasible,         // a feasible point was found (phase-1 optimum ~ 0)
  Infeasible,       // phase-1 optimum is provably positive
  IterationLimit,   // solver did not converge; no verdict
};

struct Result {
  Status status = Status::IterationLimit;
  Eigen::VectorXd x;      // feasible point when status == Feasible
  double infeasibility =  // phase-1 optimum (sum of residual magnitudes)
      std::numeric_limits<double>::infinity();
};

/// Dense phase-1 simplex with Bland's rule. The returned point is a basic
/// solution, so equality residuals are at round-off level when feasible.
Result solveFeasibility(const Problem& p, double feasTol = 1e-9,
                        int maxIter = 20000);

inline constexpr double kFree = -std::numeric_limits<double>::infinity();

}  // namespace crn::lp
