#include "crn/dynamics.hpp"

#include <cmath>

#include "crn/errors.hpp"
#include "crn/lp.hpp"

namespace crn {

RateVector::RateVector(const EGraph& g, Eigen::VectorXd values)
    : values_(std::move(values)) {
  if (values_.size() != g.edgeCount())
    throw Error(ErrorCode::DimensionMismatch,
                "rate vector length " + std::to_string(values_.size()) +
                    " != edge count " + std::to_string(g.edgeCount()));
  strictlyPositive_ = (values_.array() > 0.0).all();
}

State::State(Eigen::VectorXd values) : values_(std::move(values)) {
  if (!(values_.array() > 0.0).all())
    throw Error(ErrorCode::ParseError, "state must be strictly positive");
}

double monomial(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  double r = 1.0;
  for (int i = 0; i < x.size(); ++i) r *= std::pow(x(i), y(i));
  return r;
}

Eigen::VectorXd massActionRhs(const EGraph& g, const RateVector& k, const State& x) {
  if (x.size() != g.dimension())
    throw Error(ErrorCode::DimensionMismatch, "state dimension != graph dimension");
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(g.dimension());
  for (int e = 0; e < g.edgeCount(); ++e) {
    const Edge& ed = g.edges()[e];
    rhs += k[e] * monomial(x.values(), g.point(ed.src)) *
           (g.point(ed.tgt) - g.point(ed.src));
  }
  return rhs;
}

std::map<RationalVec, Eigen::VectorXd> netVectors(const EGraph& g,
                                                  const Eigen::VectorXd& weights) {
  std::map<RationalVec, Eigen::VectorXd> net;
  for (const Vertex& v : g.vertices())
    net.emplace(v.coords, Eigen::VectorXd::Zero(g.dimension()));
  for (int e = 0; e < g.edgeCount(); ++e) {
    const Edge& ed = g.edges()[e];
    net[g.vertices()[ed.src].coords] +=
        weights(e) * (g.point(ed.tgt) - g.point(ed.src));
  }
  return net;
}

double equivalenceResidual(const EGraph& g, const RateVector& k, const EGraph& h,
                           const RateVector& kh) {
  auto a = netVectors(g, k.values());
  auto b = netVectors(h, kh.values());
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(g.dimension());
  double worst = 0.0;
  auto side = [&](const std::map<RationalVec, Eigen::VectorXd>& m,
                  const RationalVec& key) -> const Eigen::VectorXd& {
    auto it = m.find(key);
    return it == m.end() ? zero : it->second;
  };
  for (const auto& [key, vec] : a)
    worst = std::max(worst, (vec - side(b, key)).lpNorm<Eigen::Infinity>());
  for (const auto& [key, vec] : b)
    worst = std::max(worst, (vec - side(a, key)).lpNorm<Eigen::Infinity>());
  return worst;
}

bool dynamicallyEquivalent(const EGraph& g, const RateVector& k, const EGraph& h,
                           const RateVector& kh, double tol) {
  if (g.dimension() != h.dimension())
    throw Error(ErrorCode::DimensionMismatch, "graphs in different ambient spaces");
  return equivalenceResidual(g, k, h, kh) <= tol;
}

std::optional<Eigen::VectorXd> realizeNetVectors(
    const EGraph& g, const std::map<RationalVec, Eigen::VectorXd>& targets,
    bool requirePositive, const Tolerances& tols) {
  const int n = g.dimension();
  Eigen::VectorXd k(g.edgeCount());
  k.setZero();

  // The per-vertex equations decouple by source vertex; solve one small
  // system per vertex of the union.
  std::map<RationalVec, std::vector<int>> bySource;
  for (const Vertex& v : g.vertices()) bySource[v.coords] = g.outEdgesOf(v.index);

  auto solveVertex = [&](const RationalVec& coords, const std::vector<int>& edges,
                         const Eigen::VectorXd& rhs) -> bool {
    const int m = static_cast<int>(edges.size());
    if (m == 0) return rhs.lpNorm<Eigen::Infinity>() <= tols.tol;

    Eigen::MatrixXd A(n, m);
    int src = g.findVertex(coords);
    for (int c = 0; c < m; ++c) {
      const Edge& ed = g.edges()[edges[c]];
      A.col(c) = g.point(ed.tgt) - g.point(src);
    }

    if (!requirePositive) {
      Eigen::VectorXd sol = A.completeOrthogonalDecomposition().solve(rhs);
      if ((A * sol - rhs).lpNorm<Eigen::Infinity>() > tols.tol) return false;
      for (int c = 0; c < m; ++c) k(edges[c]) = sol(c);
      return true;
    }

    lp::Problem prob;
    prob.A = A;
    prob.b = rhs;
    prob.lower = Eigen::VectorXd::Constant(m, tols.posEps);
    lp::Result res = lp::solveFeasibility(prob, tols.tol);
    if (res.status == lp::Status::IterationLimit)
      throw Error(ErrorCode::SolverFailure, "phase-1 simplex did not converge");
    if (res.status == lp::Status::Infeasible) return false;
    for (int c = 0; c < m; ++c) k(edges[c]) = res.x(c);
    return true;
  };

  for (const auto& [coords, rhs] : targets) {
    auto it = bySource.find(coords);
    if (it == bySource.end()) {
      if (rhs.lpNorm<Eigen::Infinity>() > tols.tol) return std::nullopt;
      continue;
    }
    if (!solveVertex(coords, it->second, rhs)) return std::nullopt;
  }
  // Vertices of g with no counterpart in the target map must produce zero.
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  for (const auto& [coords, edges] : bySource) {
    if (targets.count(coords)) continue;
    if (!solveVertex(coords, edges, zero)) return std::nullopt;
  }
  return k;
}

std::optional<RateVector> realizeOn(const EGraph& h, const RateVector& hRates,
                                    const EGraph& g, bool requirePositive,
                                    const Tolerances& tols) {
  if (g.dimension() != h.dimension())
    throw Error(ErrorCode::DimensionMismatch, "graphs in different ambient spaces");
  auto k = realizeNetVectors(g, netVectors(h, hRates.values()), requirePositive, tols);
  if (!k) return std::nullopt;
  return RateVector(g, std::move(*k));
}

}  // namespace crn
