#include "crn/egraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stack>

#include "crn/errors.hpp"

namespace crn {

Eigen::VectorXd StoichiometricSubspace::project(const Eigen::VectorXd& v) const {
  if (dim == 0) return Eigen::VectorXd::Zero(v.size());
  return basis * (basis.transpose() * v);
}

double StoichiometricSubspace::residual(const Eigen::VectorXd& v) const {
  return (v - project(v)).lpNorm<Eigen::Infinity>();
}

bool StoichiometricSubspace::contains(const Eigen::VectorXd& v, double tol) const {
  return residual(v) <= tol;
}

EGraph::EGraph(std::vector<RationalVec> vertexCoords, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  if (vertexCoords.empty())
    throw Error(ErrorCode::IsolatedVertex, "graph has no vertices");
  dimension_ = static_cast<int>(vertexCoords[0].size());

  std::map<RationalVec, int> seen;
  vertices_.reserve(vertexCoords.size());
  for (std::size_t i = 0; i < vertexCoords.size(); ++i) {
    if (static_cast<int>(vertexCoords[i].size()) != dimension_)
      throw Error(ErrorCode::DimensionMismatch,
                  "vertex " + std::to_string(i) + " has wrong dimension");
    if (!seen.emplace(vertexCoords[i], static_cast<int>(i)).second)
      throw Error(ErrorCode::DuplicateVertex,
                  "vertex " + std::to_string(i) + " repeats earlier coordinates");
    vertices_.push_back(Vertex{std::move(vertexCoords[i]), static_cast<int>(i)});
  }

  const int nv = vertexCount();
  std::set<Edge> edgeSet;
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= nv || e.tgt < 0 || e.tgt >= nv)
      throw Error(ErrorCode::ParseError, "edge index out of range");
    if (e.src == e.tgt)
      throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(e.src) + "->" +
                                           std::to_string(e.tgt));
    if (!edgeSet.insert(e).second)
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(e.src) +
                                                "->" + std::to_string(e.tgt));
  }

  std::vector<bool> touched(nv, false);
  for (const Edge& e : edges_) touched[e.src] = touched[e.tgt] = true;
  for (int v = 0; v < nv; ++v)
    if (!touched[v])
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v));

  points_.resize(dimension_, nv);
  for (int v = 0; v < nv; ++v)
    for (int d = 0; d < dimension_; ++d)
      points_(d, v) = toDouble(vertices_[v].coords[d]);

  outEdges_.assign(nv, {});
  inEdges_.assign(nv, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    outEdges_[edges_[e].src].push_back(static_cast<int>(e));
    inEdges_[edges_[e].tgt].push_back(static_cast<int>(e));
  }
}

int EGraph::findVertex(const RationalVec& coords) const {
  for (const Vertex& v : vertices_)
    if (v.coords == coords) return v.index;
  return -1;
}

namespace {

// Iterative Tarjan over an adjacency list.
std::vector<std::vector<int>> tarjanScc(int nv,
                                        const std::vector<std::vector<int>>& adj) {
  std::vector<int> index(nv, -1), low(nv, 0), onstack(nv, 0);
  std::vector<int> stk;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < nv; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stk.push_back(root);
    onstack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        int w = adj[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stk.push_back(w);
          onstack[w] = 1;
          call.push_back({w, 0});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stk.back();
            stk.pop_back();
            onstack[w] = 0;
            comp.push_back(w);
          } while (w != f.v);
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().v;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

std::vector<std::vector<int>> EGraph::stronglyConnectedComponents() const {
  std::vector<std::vector<int>> adj(vertexCount());
  for (const Edge& e : edges_) adj[e.src].push_back(e.tgt);
  return tarjanScc(vertexCount(), adj);
}

bool EGraph::isWeaklyReversible() const {
  auto comps = stronglyConnectedComponents();
  std::vector<int> compOf(vertexCount());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) compOf[v] = static_cast<int>(c);
  for (const Edge& e : edges_)
    if (compOf[e.src] != compOf[e.tgt]) return false;
  return true;
}

std::vector<std::vector<int>> EGraph::linkageClasses() const {
  std::vector<std::vector<int>> adj(vertexCount());
  for (const Edge& e : edges_) {
    adj[e.src].push_back(e.tgt);
    adj[e.tgt].push_back(e.src);
  }
  std::vector<int> mark(vertexCount(), -1);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < vertexCount(); ++v) {
    if (mark[v] != -1) continue;
    std::vector<int> cls;
    std::stack<int> todo;
    todo.push(v);
    mark[v] = static_cast<int>(classes.size());
    while (!todo.empty()) {
      int u = todo.top();
      todo.pop();
      cls.push_back(u);
      for (int w : adj[u])
        if (mark[w] == -1) {
          mark[w] = mark[v];
          todo.push(w);
        }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

EGraph EGraph::completeGraph() const {
  std::vector<RationalVec> coords;
  coords.reserve(vertices_.size());
  for (const Vertex& v : vertices_) coords.push_back(v.coords);
  std::vector<Edge> edges;
  for (int i = 0; i < vertexCount(); ++i)
    for (int j = 0; j < vertexCount(); ++j)
      if (i != j) edges.push_back({i, j});
  return EGraph(std::move(coords), std::move(edges));
}

StoichiometricSubspace EGraph::stoichiometricSubspace(double singularTol) const {
  Eigen::MatrixXd R(dimension_, edgeCount());
  for (int e = 0; e < edgeCount(); ++e)
    R.col(e) = point(edges_[e].tgt) - point(edges_[e].src);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int dim = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > singularTol * std::max(1.0, smax)) ++dim;
  StoichiometricSubspace s;
  s.dim = dim;
  s.basis = svd.matrixU().leftCols(dim);
  return s;
}

bool EGraph::isSubgraphOf(const EGraph& other) const {
  std::vector<int> map(vertexCount());
  for (int v = 0; v < vertexCount(); ++v) {
    map[v] = other.findVertex(vertices_[v].coords);
    if (map[v] < 0) return false;
  }
  std::set<Edge> otherEdges(other.edges_.begin(), other.edges_.end());
  for (const Edge& e : edges_)
    if (!otherEdges.count({map[e.src], map[e.tgt]})) return false;
  return true;
}

bool operator==(const EGraph& a, const EGraph& b) {
  if (a.vertexCount() != b.vertexCount() || a.edgeCount() != b.edgeCount())
    return false;
  return a.isSubgraphOf(b) && b.isSubgraphOf(a);
}

void forEachWeaklyReversibleSubgraph(
    const EGraph& g, std::size_t maxCount, std::uint64_t subsetCap,
    const std::function<bool(const EGraph&, const std::vector<int>&)>& visit) {
  if (maxCount == 0) return;

  // Work over edges sorted by (src, tgt) so DFS order is lexicographic on
  // sorted edge lists.
  std::vector<int> order(g.edgeCount());
  for (int i = 0; i < g.edgeCount(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges()[a] < g.edges()[b];
  });

  const int m = g.edgeCount();
  std::uint64_t visited = 0;
  std::size_t yielded = 0;
  std::vector<int> subset;  // positions into `order`

  auto buildAndTest = [&]() -> bool {
    // Induced subgraph over incident vertices.
    std::vector<int> vmap(g.vertexCount(), -1);
    std::vector<RationalVec> coords;
    std::vector<Edge> edges;
    for (int pos : subset) {
      const Edge& e = g.edges()[order[pos]];
      for (int v : {e.src, e.tgt})
        if (vmap[v] == -1) {
          vmap[v] = static_cast<int>(coords.size());
          coords.push_back(g.vertices()[v].coords);
        }
      edges.push_back({vmap[e.src], vmap[e.tgt]});
    }
    EGraph sub(std::move(coords), std::move(edges));
    if (!sub.isWeaklyReversible()) return true;
    ++yielded;
    std::vector<int> edgeIds;
    edgeIds.reserve(subset.size());
    for (int pos : subset) edgeIds.push_back(order[pos]);
    return visit(sub, edgeIds) && yielded < maxCount;
  };

  // DFS yielding prefixes before extensions: lexicographic subset order.
  std::function<bool(int)> dfs = [&](int next) -> bool {
    for (int j = next; j < m; ++j) {
      if (++visited > subsetCap)
        throw Error(ErrorCode::BudgetExceeded,
                    "subset enumeration exceeded cap of " + std::to_string(subsetCap));
      subset.push_back(j);
      bool keepGoing = buildAndTest();
      if (keepGoing) keepGoing = dfs(j + 1);
      subset.pop_back();
      if (!keepGoing) return false;
    }
    return true;
  };
  dfs(0);
}

std::vector<EGraph> weaklyReversibleSubgraphs(const EGraph& g, std::size_t maxCount,
                                              std::uint64_t subsetCap) {
  std::vector<EGraph> out;
  forEachWeaklyReversibleSubgraph(
      g, maxCount, subsetCap, [&](const EGraph& sub, const std::vector<int>&) {
        out.push_back(sub);
        return true;
      });
  return out;
}

EGraph mergeGraphs(const EGraph& a, const EGraph& b) {
  std::vector<RationalVec> coords;
  std::map<RationalVec, int> index;
  auto add = [&](const RationalVec& c) {
    auto [it, fresh] = index.emplace(c, static_cast<int>(coords.size()));
    if (fresh) coords.push_back(c);
    return it->second;
  };
  std::set<Edge> edgeSet;
  for (const EGraph* g : {&a, &b}) {
    for (const Edge& e : g->edges()) {
      int s = add(g->vertices()[e.src].coords);
      int t = add(g->vertices()[e.tgt].coords);
      edgeSet.insert({s, t});
    }
  }
  return EGraph(std::move(coords), {edgeSet.begin(), edgeSet.end()});
}

}  // namespace crn
