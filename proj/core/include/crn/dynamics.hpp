#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>

#include "crn/config.hpp"
#include "crn/egraph.hpp"

namespace crn {

/// Edge-indexed reaction rate vector. Entries may be signed; the
/// strictly-positive flag is maintained on construction.
class RateVector {
 public:
  RateVector(const EGraph& g, Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  double operator[](int e) const { return values_(e); }
  int size() const { return static_cast<int>(values_.size()); }
  bool strictlyPositive() const { return strictlyPositive_; }

 private:
  Eigen::VectorXd values_;
  bool strictlyPositive_;
};

/// Strictly positive state x in R^n.
class State {
 public:
  explicit State(Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  double operator[](int i) const { return values_(i); }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  Eigen::VectorXd values_;
};

/// x^y for a state x and (float) exponent vector y.
double monomial(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Right-hand side sum over edges of k_e x^{y_src} (y_tgt - y_src).
Eigen::VectorXd massActionRhs(const EGraph& g, const RateVector& k, const State& x);

/// Per-source-vertex net vectors sum k_e (y' - y), keyed by exact vertex
/// coordinates. Vertices with no outgoing edges contribute the zero vector.
std::map<RationalVec, Eigen::VectorXd> netVectors(const EGraph& g,
                                                  const Eigen::VectorXd& weights);

/// Max over vertices of the infinity-norm gap between per-vertex net vectors.
double equivalenceResidual(const EGraph& g, const RateVector& k, const EGraph& h,
                           const RateVector& kh);

bool dynamicallyEquivalent(const EGraph& g, const RateVector& k, const EGraph& h,
                           const RateVector& kh, double tol);

/// Finds k on G with (G, k) dynamically equivalent to (H, h), solved as
/// independent per-source-vertex linear feasibility problems. With
/// requirePositive, every entry of k is >= posEps. Returns nullopt on proven
/// infeasibility; throws SolverFailure when the LP gives no verdict.
std::optional<RateVector> realizeOn(const EGraph& h, const RateVector& hRates,
                                    const EGraph& g, bool requirePositive,
                                    const Tolerances& tols = {});

/// Shared realization core: find edge weights on `g` reproducing the given
/// per-source-vertex net vectors.
std::optional<Eigen::VectorXd> realizeNetVectors(
    const EGraph& g, const std::map<RationalVec, Eigen::VectorXd>& targets,
    bool requirePositive, const Tolerances& tols);

}  // namespace crn
