#pragma once

#include <optional>

#include "crn/dynamics.hpp"

namespace crn {

/// Edge-indexed flux vector; shares the RateVector representation.
class FluxVector {
 public:
  FluxVector(const EGraph& g, Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  double operator[](int e) const { return values_(e); }
  int size() const { return static_cast<int>(values_.size()); }
  bool strictlyPositive() const { return strictlyPositive_; }

 private:
  Eigen::VectorXd values_;
  bool strictlyPositive_;
};

/// Max per-vertex |inflow - outflow| normalized by max(1, inflow + outflow).
double fluxBalanceResidual(const EGraph& g, const FluxVector& j);

bool isComplexBalancedFlux(const EGraph& g, const FluxVector& j, double tol);

double fluxEquivalenceResidual(const EGraph& g, const FluxVector& j,
                               const EGraph& h, const FluxVector& jh);

bool fluxEquivalent(const EGraph& g, const FluxVector& j, const EGraph& h,
                    const FluxVector& jh, double tol);

std::optional<FluxVector> realizeFluxOn(const EGraph& h, const FluxVector& jh,
                                        const EGraph& g, bool requirePositive,
                                        const Tolerances& tols = {});

/// Decides membership of jh in J(H, G) (positive) or J_R(H, G) (signed):
/// jh must be complex-balanced on H and realizable on G.
std::optional<FluxVector> fluxMembership(const EGraph& h, const FluxVector& jh,
                                         const EGraph& g, bool requirePositive,
                                         const Tolerances& tols = {});

/// J = k .* x^y (source exponent), the scaling shared by rates and fluxes.
FluxVector rateToFlux(const EGraph& g, const RateVector& k, const State& x);
RateVector fluxToRate(const EGraph& g, const FluxVector& j, const State& x);

}  // namespace crn
