#pragma once

#include <random>
#include <vector>

#include "crn/flux.hpp"

// Shared fixtures: the collinear four-vertex pair (line-shaped source graph
// and its complete counterpart), complex-balanced flux generators, and small
// helper graphs used across suites.
namespace fixtures {

inline crn::RationalVec rv(std::initializer_list<std::int64_t> ints) {
  crn::RationalVec v;
  for (auto i : ints) v.emplace_back(i);
  return v;
}

inline std::vector<crn::RationalVec> collinearVertices() {
  return {rv({0, 3}), rv({1, 2}), rv({2, 1}), rv({3, 0})};
}

/// Four collinear vertices, edges 0->1, 1->2, 2->3, 3->2.
inline crn::EGraph lineGraph() {
  return crn::EGraph(collinearVertices(), {{0, 1}, {1, 2}, {2, 3}, {3, 2}});
}

/// Complete graph on the same four vertices (12 edges, lexicographic order).
inline crn::EGraph k4Graph() { return lineGraph().completeGraph(); }

inline int edgeIndex(const crn::EGraph& g, int s, int t) {
  for (int e = 0; e < g.edgeCount(); ++e)
    if (g.edges()[e].src == s && g.edges()[e].tgt == t) return e;
  return -1;
}

/// Rates on lineGraph() dynamically equivalent to (k4Graph(), kt):
/// forced per-source-vertex coefficients along the common direction.
inline Eigen::Vector4d lineRatesFromK4(const crn::EGraph& k4,
                                       const Eigen::VectorXd& kt) {
  auto e = [&](int s, int t) { return kt(edgeIndex(k4, s, t)); };
  Eigen::Vector4d k;
  k(0) = e(0, 1) + 2 * e(0, 2) + 3 * e(0, 3);
  k(1) = e(1, 2) - e(1, 0) + 2 * e(1, 3);
  k(2) = e(2, 3) - e(2, 1) - 2 * e(2, 0);
  k(3) = e(3, 2) + 2 * e(3, 1) + 3 * e(3, 0);
  return k;
}

/// Positive combination of directed-cycle indicator fluxes; complex-balanced
/// by construction. `cycles` lists vertex loops (closing edge implied).
inline crn::FluxVector cycleFlux(const crn::EGraph& g,
                                 const std::vector<std::vector<int>>& cycles,
                                 std::mt19937_64& rng, double lo = 0.1,
                                 double hi = 10.0) {
  std::uniform_real_distribution<double> weight(lo, hi);
  Eigen::VectorXd j = Eigen::VectorXd::Zero(g.edgeCount());
  for (const auto& cyc : cycles) {
    double w = weight(rng);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int e = edgeIndex(g, cyc[i], cyc[(i + 1) % cyc.size()]);
      j(e) += w;
    }
  }
  return crn::FluxVector(g, std::move(j));
}

/// All 2-cycles and directed triangles of a complete graph on 4 vertices;
/// spans the circulation space.
inline std::vector<std::vector<int>> k4CycleBasis() {
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cycles.push_back({i, j});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        cycles.push_back({a, b, c});
        cycles.push_back({a, c, b});
      }
  return cycles;
}

inline crn::State randomState(int n, std::mt19937_64& rng, double logLo = -1.5,
                              double logHi = 1.5) {
  std::uniform_real_distribution<double> u(logLo, logHi);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = std::exp(u(rng));
  return crn::State(std::move(x));
}

/// Random member of the toric locus via a complex-balanced flux and a random
/// state: k = J / x^y. The state is the witness.
inline std::pair<crn::RateVector, crn::State> randomToricMember(
    const crn::EGraph& g, const std::vector<std::vector<int>>& cycles,
    std::mt19937_64& rng) {
  crn::FluxVector j = cycleFlux(g, cycles, rng);
  crn::State x = randomState(g.dimension(), rng);
  return {crn::fluxToRate(g, j, x), x};
}

/// 1D two-cycle 0 <-> 1.
inline crn::EGraph twoCycle() {
  return crn::EGraph({rv({0}), rv({1})}, {{0, 1}, {1, 0}});
}

/// 2D directed triangle on the unit simplex corners.
inline crn::EGraph threeCycle() {
  return crn::EGraph({rv({0, 0}), rv({1, 0}), rv({0, 1})}, {{0, 1}, {1, 2}, {2, 0}});
}

/// Two fixed weakly reversible graphs on <= 5 vertices built from cycle
/// unions, with their cycle bases.
struct CyclicGraph {
  crn::EGraph graph;
  std::vector<std::vector<int>> cycles;
};

inline CyclicGraph wrGraphA() {
  // 4 vertices in R^3, a triangle plus a 2-cycle sharing vertex 0.
  crn::EGraph g({rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 2})},
                {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}});
  return {std::move(g), {{0, 1, 2}, {0, 3}}};
}

inline CyclicGraph wrGraphB() {
  // 5 vertices in R^2, two triangles sharing an edge's endpoints.
  crn::EGraph g({rv({0, 0}), rv({2, 0}), rv({1, 2}), rv({3, 1}), rv({1, -1})},
                {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 4}, {4, 1}});
  return {std::move(g), {{0, 1, 2}, {1, 3, 4}}};
}

}  // namespace fixtures
