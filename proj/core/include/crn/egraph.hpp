#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "crn/config.hpp"
#include "crn/rational.hpp"

namespace crn {

struct Vertex {
  RationalVec coords;
  int index = -1;
};

struct Edge {
  int src = -1;
  int tgt = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orthonormalized span of the reaction vectors. `basis` is n x dim with
/// orthonormal columns; dim == 0 means the trivial subspace.
struct StoichiometricSubspace {
  Eigen::MatrixXd basis;
  int dim = 0;

  Eigen::VectorXd project(const Eigen::VectorXd& v) const;
  double residual(const Eigen::VectorXd& v) const;
  bool contains(const Eigen::VectorXd& v, double tol) const;
};

/// Directed graph embedded in R^n with exact rational vertex coordinates.
/// Immutable after construction; no self-loops, no isolated vertices, no
/// duplicate vertices or edges.
class EGraph {
 public:
  EGraph(std::vector<RationalVec> vertexCoords, std::vector<Edge> edges);

  int dimension() const { return dimension_; }
  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Vertex coordinates converted to floating point (column i = vertex i).
  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::VectorXd point(int v) const { return points_.col(v); }

  const std::vector<int>& outEdgesOf(int v) const { return outEdges_[v]; }
  const std::vector<int>& inEdgesOf(int v) const { return inEdges_[v]; }

  /// Index of the vertex with exactly these coordinates, or -1.
  int findVertex(const RationalVec& coords) const;

  bool isWeaklyReversible() const;
  std::vector<std::vector<int>> stronglyConnectedComponents() const;
  std::vector<std::vector<int>> linkageClasses() const;
  EGraph completeGraph() const;
  StoichiometricSubspace stoichiometricSubspace(double singularTol = 1e-10) const;

  /// True when every vertex of `this` appears (by exact coordinates) in
  /// `other` and every edge of `this` maps to an edge of `other`.
  bool isSubgraphOf(const EGraph& other) const;

  friend bool operator==(const EGraph& a, const EGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  int dimension_ = 0;
  Eigen::MatrixXd points_;
  std::vector<std::vector<int>> outEdges_;
  std::vector<std::vector<int>> inEdges_;
};

/// Yields every edge-subset graph of `g` that is weakly reversible, without
/// isolated vertices, deduplicated, in lexicographic order on sorted edge
/// lists. Stops after `maxCount` yields; throws BudgetExceeded when more than
/// `subsetCap` subsets would have to be visited.
void forEachWeaklyReversibleSubgraph(
    const EGraph& g, std::size_t maxCount, std::uint64_t subsetCap,
    const std::function<bool(const EGraph&, const std::vector<int>& edgeSubset)>& visit);

std::vector<EGraph> weaklyReversibleSubgraphs(
    const EGraph& g, std::size_t maxCount,
    std::uint64_t subsetCap = SearchBudget{}.subsetCap);

/// Union of two graphs over exact vertex coordinates.
EGraph mergeGraphs(const EGraph& a, const EGraph& b);

}  // namespace crn
