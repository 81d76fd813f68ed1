#include "crn/flux.hpp"

#include <cmath>

#include "crn/errors.hpp"

namespace crn {

FluxVector::FluxVector(const EGraph& g, Eigen::VectorXd values)
    : values_(std::move(values)) {
  if (values_.size() != g.edgeCount())
    throw Error(ErrorCode::DimensionMismatch,
                "flux vector length != edge count");
  strictlyPositive_ = (values_.array() > 0.0).all();
}

double fluxBalanceResidual(const EGraph& g, const FluxVector& j) {
  double worst = 0.0;
  for (int v = 0; v < g.vertexCount(); ++v) {
    double in = 0.0, out = 0.0;
    for (int e : g.inEdgesOf(v)) in += j[e];
    for (int e : g.outEdgesOf(v)) out += j[e];
    worst = std::max(worst, std::abs(in - out) / std::max(1.0, std::abs(in) + std::abs(out)));
  }
  return worst;
}

bool isComplexBalancedFlux(const EGraph& g, const FluxVector& j, double tol) {
  return fluxBalanceResidual(g, j) <= tol;
}

double fluxEquivalenceResidual(const EGraph& g, const FluxVector& j,
                               const EGraph& h, const FluxVector& jh) {
  RateVector a(g, j.values()), b(h, jh.values());
  return equivalenceResidual(g, a, h, b);
}

bool fluxEquivalent(const EGraph& g, const FluxVector& j, const EGraph& h,
                    const FluxVector& jh, double tol) {
  return fluxEquivalenceResidual(g, j, h, jh) <= tol;
}

std::optional<FluxVector> realizeFluxOn(const EGraph& h, const FluxVector& jh,
                                        const EGraph& g, bool requirePositive,
                                        const Tolerances& tols) {
  auto w = realizeNetVectors(g, netVectors(h, jh.values()), requirePositive, tols);
  if (!w) return std::nullopt;
  return FluxVector(g, std::move(*w));
}

std::optional<FluxVector> fluxMembership(const EGraph& h, const FluxVector& jh,
                                         const EGraph& g, bool requirePositive,
                                         const Tolerances& tols) {
  if (!h.isWeaklyReversible())
    throw Error(ErrorCode::NotWeaklyReversible, "flux membership needs a weakly reversible source graph");
  if (!jh.strictlyPositive()) return std::nullopt;
  if (!isComplexBalancedFlux(h, jh, tols.tol)) return std::nullopt;
  return realizeFluxOn(h, jh, g, requirePositive, tols);
}

FluxVector rateToFlux(const EGraph& g, const RateVector& k, const State& x) {
  Eigen::VectorXd j(g.edgeCount());
  for (int e = 0; e < g.edgeCount(); ++e)
    j(e) = k[e] * monomial(x.values(), g.point(g.edges()[e].src));
  return FluxVector(g, std::move(j));
}

RateVector fluxToRate(const EGraph& g, const FluxVector& j, const State& x) {
  Eigen::VectorXd k(g.edgeCount());
  for (int e = 0; e < g.edgeCount(); ++e)
    k(e) = j[e] / monomial(x.values(), g.point(g.edges()[e].src));
  return RateVector(g, std::move(k));
}

}  // namespace crn
