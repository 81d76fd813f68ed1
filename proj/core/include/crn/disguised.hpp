#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crn/toric.hpp"

namespace crn {

struct DisguisedCertificate {
  bool member = false;
  std::optional<EGraph> targetGraph;
  std::optional<RateVector> realizedRates;  // in K(targetGraph)
  std::optional<State> steadyState;
  bool searchExhausted = false;  // full budget consumed without success
  double equivalenceResidual = 0.0;
  double balanceResidual = 0.0;
};

struct PathSegment {
  enum class Kind { Fiber, Line };
  Kind kind = Kind::Fiber;
  std::vector<std::pair<double, RateVector>> samples;  // (t, rates on G)
};

struct PathResult {
  std::vector<PathSegment> segments;
  RateVector endpointA;
  RateVector endpointB;
  std::vector<DisguisedCertificate> certificates;  // one per sample
  std::optional<EGraph> mergedGraph;
};

/// Searches for a state x and rates on `target` certifying that (G, k) is
/// dynamically equivalent to a complex-balanced system on `target`. For
/// fixed x the problem is linear; the search over x is multistart
/// Nelder-Mead in log-space driven by the phase-1 LP infeasibility.
/// Verdict "member=false" is "not found within budget", never a proof.
DisguisedCertificate disguisedMembership(const EGraph& g, const RateVector& k,
                                         const EGraph& target, bool allowSignedRates,
                                         const SearchBudget& budget = {},
                                         const Tolerances& tols = {});

/// Iterates weakly reversible subgraphs of complete(G) in deterministic
/// lexicographic order, returning the first successful target.
DisguisedCertificate disguisedLocusMembership(const EGraph& g, const RateVector& k,
                                              bool allowSignedRates,
                                              const SearchBudget& budget = {},
                                              const Tolerances& tols = {});

/// Fiber segment t -> k .* x1^y / x(t)^y with x(t) = (1-t) x1 + t xTarget.
/// The t = 0 sample equals k exactly.
PathSegment fiberPath(const EGraph& g, const RateVector& k,
                      const DisguisedCertificate& cert, const State& xTarget,
                      int samples, const Tolerances& tols = {});

/// Three-segment path (fiber, line, fiber) between two members of the
/// (R-)disguised toric locus, with re-verified certificates at every sample.
PathResult connectMembers(const EGraph& g, const RateVector& ka, const RateVector& kb,
                          bool allowSignedRates, const State& x0,
                          const SearchBudget& budget = {}, int samples = 32,
                          const Tolerances& tols = {});

}  // namespace crn
