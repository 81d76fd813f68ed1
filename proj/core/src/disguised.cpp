#include "crn/disguised.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "crn/errors.hpp"
#include "crn/lp.hpp"

namespace crn {

namespace {

constexpr double kSearchFeasTol = 1e-10;

// LP over candidate rates on `target` at a fixed state x: dynamical
// equivalence to (G, k) plus complex balance of the candidate at x.
// Equivalence rows do not depend on x; balance rows are scaled to unit
// magnitude so the phase-1 objective is comparable across states.
struct CandidateLp {
  Eigen::MatrixXd eqRows;   // equivalence block
  Eigen::VectorXd eqRhs;
  const EGraph* target;

  static CandidateLp build(const EGraph& g, const RateVector& k, const EGraph& target) {
    CandidateLp c;
    c.target = &target;
    auto gNet = netVectors(g, k.values());

    std::vector<RationalVec> unionVerts;
    for (const Vertex& v : g.vertices()) unionVerts.push_back(v.coords);
    for (const Vertex& v : target.vertices())
      if (g.findVertex(v.coords) < 0) unionVerts.push_back(v.coords);
    std::sort(unionVerts.begin(), unionVerts.end());

    const int n = g.dimension();
    const int m = target.edgeCount();
    c.eqRows.setZero(static_cast<int>(unionVerts.size()) * n, m);
    c.eqRhs.setZero(static_cast<int>(unionVerts.size()) * n);
    for (std::size_t vi = 0; vi < unionVerts.size(); ++vi) {
      const int row0 = static_cast<int>(vi) * n;
      int tv = target.findVertex(unionVerts[vi]);
      if (tv >= 0)
        for (int e : target.outEdgesOf(tv)) {
          Eigen::VectorXd dir =
              target.point(target.edges()[e].tgt) - target.point(tv);
          c.eqRows.block(row0, e, n, 1) = dir;
        }
      auto it = gNet.find(unionVerts[vi]);
      if (it != gNet.end()) c.eqRhs.segment(row0, n) = it->second;
    }
    return c;
  }

  lp::Result solveAt(const Eigen::VectorXd& x, double posEps) const {
    const int m = target->edgeCount();
    const int nv = target->vertexCount();
    Eigen::MatrixXd bal = Eigen::MatrixXd::Zero(nv, m);
    for (int e = 0; e < m; ++e) {
      const Edge& ed = target->edges()[e];
      double w = monomial(x, target->point(ed.src));
      bal(ed.src, e) -= w;
      bal(ed.tgt, e) += w;
    }
    for (int v = 0; v < nv; ++v) {
      double scale = bal.row(v).cwiseAbs().maxCoeff();
      if (scale > 0) bal.row(v) /= scale;
    }

    lp::Problem p;
    p.A.resize(eqRows.rows() + nv, m);
    p.A << eqRows, bal;
    p.b.resize(eqRows.rows() + nv);
    p.b << eqRhs, Eigen::VectorXd::Zero(nv);
    p.lower = Eigen::VectorXd::Constant(m, posEps);
    return lp::solveFeasibility(p, kSearchFeasTol);
  }
};

// Deterministic Nelder-Mead minimization; returns the best value found and
// updates z in place.
double nelderMead(const std::function<double(const Eigen::VectorXd&)>& f,
                  Eigen::VectorXd& z, double scale, int maxIter) {
  const int n = static_cast<int>(z.size());
  std::vector<Eigen::VectorXd> pts(n + 1, z);
  std::vector<double> val(n + 1);
  for (int i = 1; i <= n; ++i) pts[i](i - 1) += scale;
  for (int i = 0; i <= n; ++i) val[i] = f(pts[i]);

  auto order = [&]() {
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return val[a] < val[b]; });
    std::vector<Eigen::VectorXd> p2;
    std::vector<double> v2;
    for (int i : idx) {
      p2.push_back(pts[i]);
      v2.push_back(val[i]);
    }
    pts = std::move(p2);
    val = std::move(v2);
  };

  for (int iter = 0; iter < maxIter; ++iter) {
    order();
    if (val[0] <= kSearchFeasTol / 10) break;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[i];
    centroid /= n;
    double spread = 0;
    for (int i = 0; i <= n; ++i)
      spread = std::max(spread, (pts[i] - centroid).lpNorm<Eigen::Infinity>());
    if (spread < 1e-13) break;

    Eigen::VectorXd xr = centroid + (centroid - pts[n]);
    double fr = f(xr);
    if (fr < val[0]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[n]);
      double fe = f(xe);
      if (fe < fr) {
        pts[n] = xe;
        val[n] = fe;
      } else {
        pts[n] = xr;
        val[n] = fr;
      }
    } else if (fr < val[n - 1]) {
      pts[n] = xr;
      val[n] = fr;
    } else {
      Eigen::VectorXd xc = centroid + 0.5 * (pts[n] - centroid);
      double fc = f(xc);
      if (fc < val[n]) {
        pts[n] = xc;
        val[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          val[i] = f(pts[i]);
        }
      }
    }
  }
  order();
  z = pts[0];
  return val[0];
}

DisguisedCertificate verifyCandidate(const EGraph& g, const RateVector& k,
                                     const EGraph& target, const RateVector& kt,
                                     const State& x, const Tolerances& tols) {
  DisguisedCertificate cert;
  cert.equivalenceResidual = equivalenceResidual(g, k, target, kt);
  cert.balanceResidual = complexBalanceResidual(target, kt, x);
  cert.member = cert.equivalenceResidual <= tols.tol &&
                cert.balanceResidual <= tols.tolLoglin &&
                kt.values().minCoeff() > 0.0 &&
                toricMembership(target, kt, tols).member;
  if (cert.member) {
    cert.targetGraph = target;
    cert.realizedRates = kt;
    cert.steadyState = x;
  }
  return cert;
}

}  // namespace

DisguisedCertificate disguisedMembership(const EGraph& g, const RateVector& k,
                                         const EGraph& target, bool allowSignedRates,
                                         const SearchBudget& budget,
                                         const Tolerances& tols) {
  if (!target.isWeaklyReversible())
    throw Error(ErrorCode::NotWeaklyReversible, "target graph must be weakly reversible");
  if (!allowSignedRates && !k.strictlyPositive())
    throw Error(ErrorCode::MembershipFailure,
                "positive-locus membership requires strictly positive rates");

  DisguisedCertificate best;
  CandidateLp lpSpec = CandidateLp::build(g, k, target);

  // x-independent necessary condition: the equivalence block alone must be
  // satisfiable with positive candidate rates.
  {
    lp::Problem p{lpSpec.eqRows, lpSpec.eqRhs,
                  Eigen::VectorXd::Constant(target.edgeCount(), tols.posEps)};
    lp::Result r = lp::solveFeasibility(p, kSearchFeasTol);
    if (r.status == lp::Status::Infeasible) {
      best.searchExhausted = true;
      return best;
    }
  }

  const int n = g.dimension();
  auto objective = [&](const Eigen::VectorXd& z) {
    return lpSpec.solveAt(z.array().exp(), tols.posEps).infeasibility;
  };

  std::mt19937_64 rng(budget.seed);
  std::uniform_real_distribution<double> box(budget.logBoxLo, budget.logBoxHi);

  for (int start = 0; start <= budget.starts; ++start) {
    Eigen::VectorXd z(n);
    if (start == 0)
      z.setZero();
    else
      for (int i = 0; i < n; ++i) z(i) = box(rng);

    // Three rounds with shrinking simplex; the objective is piecewise linear
    // in the balance block, so the final rounds polish toward the root.
    double f = objective(z);
    for (double scale : {1.0, 0.05, 1e-4}) {
      f = nelderMead(objective, z, scale, budget.iters / 3 + 1);
      if (f <= kSearchFeasTol) break;
    }
    if (f <= kSearchFeasTol) {
      State x(z.array().exp());
      // Prefer an interior candidate: basic solutions park rates exactly at
      // the floor, which is fragile under later fiber rescaling. Fall back
      // to the tight floor when the fat one is infeasible.
      double rhsScale = std::max(1.0, lpSpec.eqRhs.cwiseAbs().maxCoeff());
      lp::Result r = lpSpec.solveAt(x.values(), std::max(tols.posEps, 1e-6 * rhsScale));
      if (r.status != lp::Status::Feasible)
        r = lpSpec.solveAt(x.values(), tols.posEps);
      if (r.status == lp::Status::Feasible) {
        RateVector kt(target, r.x);
        DisguisedCertificate cert = verifyCandidate(g, k, target, kt, x, tols);
        if (cert.member) return cert;
      }
    }
  }
  best.searchExhausted = true;
  return best;
}

DisguisedCertificate disguisedLocusMembership(const EGraph& g, const RateVector& k,
                                              bool allowSignedRates,
                                              const SearchBudget& budget,
                                              const Tolerances& tols) {
  EGraph full = g.completeGraph();

  // Deterministic candidate order: the full complete graph first (it succeeds
  // for most members and skips the subgraph sweep), then all weakly
  // reversible subgraphs in lexicographic order.
  DisguisedCertificate found =
      disguisedMembership(g, k, full, allowSignedRates, budget, tols);
  if (found.member) return found;

  bool interrupted = false;
  forEachWeaklyReversibleSubgraph(
      full, static_cast<std::size_t>(-1), budget.subsetCap,
      [&](const EGraph& cand, const std::vector<int>&) {
        if (cand == full) return true;
        DisguisedCertificate cert =
            disguisedMembership(g, k, cand, allowSignedRates, budget, tols);
        if (cert.member) {
          found = std::move(cert);
          interrupted = true;
          return false;
        }
        return true;
      });
  if (!interrupted) found.searchExhausted = true;
  return found;
}

PathSegment fiberPath(const EGraph& g, const RateVector& k,
                      const DisguisedCertificate& cert, const State& xTarget,
                      int samples, const Tolerances& tols) {
  if (!cert.member || !cert.steadyState || !cert.targetGraph)
    throw Error(ErrorCode::MembershipFailure, "fiber path needs a member certificate");
  const State& x1 = *cert.steadyState;
  StoichiometricSubspace sub = cert.targetGraph->stoichiometricSubspace();
  if (sub.residual(xTarget.values() - x1.values()) > std::max(tols.tolLin, 1e-9))
    throw Error(ErrorCode::ClassMismatch,
                "target state is outside the compatibility class of the witness");

  PathSegment seg;
  seg.kind = PathSegment::Kind::Fiber;
  for (int i = 0; i < samples; ++i) {
    double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
    State xt(((1.0 - t) * x1.values() + t * xTarget.values()).eval());
    seg.samples.emplace_back(t, i == 0 ? k : fiberRateVector(g, k, xt, x1));
  }
  return seg;
}

PathResult connectMembers(const EGraph& g, const RateVector& ka, const RateVector& kb,
                          bool allowSignedRates, const State& x0,
                          const SearchBudget& budget, int samples,
                          const Tolerances& tols) {
  DisguisedCertificate certA = disguisedLocusMembership(g, ka, allowSignedRates, budget, tols);
  if (!certA.member)
    throw Error(ErrorCode::MembershipFailure, "endpoint A is not a certified member");
  DisguisedCertificate certB = disguisedLocusMembership(g, kb, allowSignedRates, budget, tols);
  if (!certB.member)
    throw Error(ErrorCode::MembershipFailure, "endpoint B is not a certified member");

  const EGraph& g1 = *certA.targetGraph;
  const EGraph& g2 = *certB.targetGraph;
  const RateVector& k1 = *certA.realizedRates;
  const RateVector& k2 = *certB.realizedRates;

  // Birch points of the two realizations in the class of x0.
  CompatibilityClass cls1{x0, g1.stoichiometricSubspace()};
  CompatibilityClass cls2{x0, g2.stoichiometricSubspace()};
  State x1 = birchPoint(g1, k1, *certA.steadyState, cls1, tols);
  State x2 = birchPoint(g2, k2, *certB.steadyState, cls2, tols);

  PathResult path{{}, ka, kb, {}, std::nullopt};

  auto certify = [&](const RateVector& kG, const EGraph& target,
                     const RateVector& kt, const State& x) {
    DisguisedCertificate c = verifyCandidate(g, kG, target, kt, x, tols);
    if (!c.member) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "path sample failed re-verification (equivalence %.3g, "
                    "balance %.3g, min rate %.3g)",
                    c.equivalenceResidual, c.balanceResidual,
                    kt.values().minCoeff());
      throw Error(ErrorCode::CertificationFailure, msg);
    }
    path.certificates.push_back(std::move(c));
  };

  auto checkPositive = [&](const RateVector& kG) {
    if (!allowSignedRates && !kG.strictlyPositive())
      throw Error(ErrorCode::CertificationFailure,
                  "positive-locus path sample has a non-positive rate");
  };

  // Segment 1: fiber transport of ka from x1 to x0.
  PathSegment segA;
  segA.kind = PathSegment::Kind::Fiber;
  for (int i = 0; i < samples; ++i) {
    double t = static_cast<double>(i) / (samples - 1);
    State xt(((1.0 - t) * x1.values() + t * x0.values()).eval());
    // The t = 0 endpoint is ka by algebra; use it directly so it is exact.
    RateVector kt = i == 0 ? ka : fiberRateVector(g, ka, xt, x1);
    RateVector realized = i == 0 ? k1 : fiberRateVector(g1, k1, xt, x1);
    checkPositive(kt);
    certify(kt, g1, realized, xt);
    segA.samples.emplace_back(t, std::move(kt));
  }

  // Transported endpoints sharing the steady state x0.
  RateVector kaPrime = segA.samples.back().second;
  RateVector k1Prime = fiberRateVector(g1, k1, x0, x1);
  RateVector k2Prime = fiberRateVector(g2, k2, x0, x2);
  RateVector kbPrime = fiberRateVector(g, kb, x0, x2);

  // Segment 2: straight line between the transported endpoints, certified on
  // the merged graph with zero-rate edges dropped.
  EGraph g12 = mergeGraphs(g1, g2);
  path.mergedGraph = g12;

  auto mergedRates = [&](double t) {
    Eigen::VectorXd vals = Eigen::VectorXd::Zero(g12.edgeCount());
    auto add = [&](const EGraph& src, const RateVector& kr, double w) {
      if (w == 0.0) return;
      for (int e = 0; e < src.edgeCount(); ++e) {
        int s = g12.findVertex(src.vertices()[src.edges()[e].src].coords);
        int tt = g12.findVertex(src.vertices()[src.edges()[e].tgt].coords);
        for (int ge = 0; ge < g12.edgeCount(); ++ge)
          if (g12.edges()[ge].src == s && g12.edges()[ge].tgt == tt) {
            vals(ge) += w * kr[e];
            break;
          }
      }
    };
    add(g1, k1Prime, 1.0 - t);
    add(g2, k2Prime, t);
    return vals;
  };

  PathSegment segB;
  segB.kind = PathSegment::Kind::Line;
  for (int i = 0; i < samples; ++i) {
    double t = static_cast<double>(i) / (samples - 1);
    Eigen::VectorXd kv(g.edgeCount());
    for (int e = 0; e < g.edgeCount(); ++e)
      kv(e) = (1.0 - t) * kaPrime[e] + t * kbPrime[e];
    RateVector kt(g, std::move(kv));
    checkPositive(kt);

    // Drop zero edges so the certificate rates stay strictly positive.
    Eigen::VectorXd merged = mergedRates(t);
    std::vector<RationalVec> coords;
    std::vector<Edge> edges;
    std::vector<double> vals;
    std::vector<int> vmap(g12.vertexCount(), -1);
    for (int e = 0; e < g12.edgeCount(); ++e) {
      if (merged(e) <= 0.0) continue;
      const Edge& ed = g12.edges()[e];
      for (int v : {ed.src, ed.tgt})
        if (vmap[v] == -1) {
          vmap[v] = static_cast<int>(coords.size());
          coords.push_back(g12.vertices()[v].coords);
        }
      edges.push_back({vmap[ed.src], vmap[ed.tgt]});
      vals.push_back(merged(e));
    }
    EGraph targetT(std::move(coords), std::move(edges));
    RateVector ratesT(targetT, Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size()));
    certify(kt, targetT, ratesT, x0);
    segB.samples.emplace_back(t, std::move(kt));
  }

  // Segment 3: fiber transport from x0 back to x2, ending at kb exactly.
  PathSegment segC;
  segC.kind = PathSegment::Kind::Fiber;
  for (int i = 0; i < samples; ++i) {
    double t = static_cast<double>(i) / (samples - 1);
    State xt(((1.0 - t) * x0.values() + t * x2.values()).eval());
    // The t = 1 endpoint is kb by algebra; use it directly so it is exact.
    RateVector kt = i == samples - 1 ? kb : fiberRateVector(g, kb, xt, x2);
    RateVector realized = i == samples - 1 ? k2 : fiberRateVector(g2, k2, xt, x2);
    checkPositive(kt);
    certify(kt, g2, realized, xt);
    segC.samples.emplace_back(t, std::move(kt));
  }

  path.segments = {std::move(segA), std::move(segB), std::move(segC)};
  return path;
}

}  // namespace crn
