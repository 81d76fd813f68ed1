#pragma once

#include <optional>
#include <string>

#include "crn/flux.hpp"

namespace crn {

struct ToricCertificate {
  bool member = false;
  std::optional<State> witnessState;       // complex-balanced steady state
  std::optional<RateVector> witnessRates;  // realizing rates when a target graph is involved
  double residual = 0.0;                   // balance residual at the witness
  bool provenInfeasible = false;
  std::string reason;
};

/// (anchor + S) intersected with the positive orthant.
struct CompatibilityClass {
  State anchor;
  StoichiometricSubspace subspace;

  bool contains(const State& x, double tolLin) const {
    return subspace.contains(x.values() - anchor.values(), tolLin);
  }
};

/// Max per-vertex |sum_out k x^y - sum_in k x^{y'}| normalized by
/// max(1, outflow + inflow).
double complexBalanceResidual(const EGraph& g, const RateVector& k, const State& x);

bool isComplexBalancedState(const EGraph& g, const RateVector& k, const State& x,
                            double tol);

/// Decides k in K(G): weak reversibility, then the positive kernel of the
/// per-class weighted Laplacian, then a log-linear solve for the witness.
ToricCertificate toricMembership(const EGraph& g, const RateVector& k,
                                 const Tolerances& tols = {});

/// Unique steady state of the complex-balanced system (G, k) inside the
/// compatibility class, via damped Newton on the free-energy functional in
/// class coordinates.
State birchPoint(const EGraph& g, const RateVector& kMember, const State& xStar,
                 const CompatibilityClass& cls, const Tolerances& tols = {},
                 int maxIter = 200, double gradTol = 1e-10);

/// k* rescaled so that the steady state moves from xStar to x:
/// entries k*_e (xStar)^y / x^y.
RateVector fiberRateVector(const EGraph& g, const RateVector& kStar, const State& x,
                           const State& xStar);

/// Rates from a complex-balanced flux and a state: k_e = J_e / x^{src}.
RateVector phi(const EGraph& g, const FluxVector& j, const State& x);

/// Inverse of phi up to the choice of compatibility class: the Birch point of
/// (G, k) in cls and the flux J_e = k_e x^{src}.
std::pair<FluxVector, State> phiInverse(const EGraph& g, const RateVector& kMember,
                                        const CompatibilityClass& cls,
                                        const Tolerances& tols = {});

/// Decides h in K(H, G) (positive) or K_R(H, G) (signed): h must lie in K(H)
/// and (H, h) must be realizable on G.
ToricCertificate toricMembershipOn(const EGraph& h, const RateVector& hRates,
                                   const EGraph& g, bool requirePositive,
                                   const Tolerances& tols = {});

/// eps * fiber(kStar, x1, xStar) + zero-extension of ki; the perturbed
/// subgraph rate vector stays in K(G) with steady state x1 (computed
/// internally from (Gi, ki)).
RateVector closureApprox(const EGraph& g, const EGraph& gi, const RateVector& ki,
                         const RateVector& kStar, const State& xStar, double eps,
                         const Tolerances& tols = {});

}  // namespace crn
