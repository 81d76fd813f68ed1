#include "crn/toric.hpp"

#include <cmath>

#include "crn/errors.hpp"

namespace crn {

double complexBalanceResidual(const EGraph& g, const RateVector& k, const State& x) {
  double worst = 0.0;
  for (int v = 0; v < g.vertexCount(); ++v) {
    double out = 0.0, in = 0.0;
    for (int e : g.outEdgesOf(v))
      out += k[e] * monomial(x.values(), g.point(v));
    for (int e : g.inEdgesOf(v))
      in += k[e] * monomial(x.values(), g.point(g.edges()[e].src));
    worst = std::max(worst,
                     std::abs(out - in) / std::max(1.0, std::abs(out) + std::abs(in)));
  }
  return worst;
}

bool isComplexBalancedState(const EGraph& g, const RateVector& k, const State& x,
                            double tol) {
  return complexBalanceResidual(g, k, x) <= tol;
}

ToricCertificate toricMembership(const EGraph& g, const RateVector& k,
                                 const Tolerances& tols) {
  ToricCertificate cert;
  if (k.values().minCoeff() < tols.posEps) {
    cert.reason = "rate vector below positivity floor";
    return cert;
  }
  if (!g.isWeaklyReversible()) {
    cert.provenInfeasible = true;
    cert.reason = "not weakly reversible";
    return cert;
  }

  const auto classes = g.linkageClasses();
  const int nv = g.vertexCount();
  const int n = g.dimension();

  // Tree-constant vector rho: positive kernel of the per-class weighted
  // Laplacian, normalized to max entry 1.
  Eigen::VectorXd logRho(nv);
  for (const auto& cls : classes) {
    const int c = static_cast<int>(cls.size());
    std::vector<int> pos(nv, -1);
    for (int i = 0; i < c; ++i) pos[cls[i]] = i;

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(c, c);
    for (int e = 0; e < g.edgeCount(); ++e) {
      const Edge& ed = g.edges()[e];
      if (pos[ed.src] < 0) continue;
      L(pos[ed.tgt], pos[ed.src]) += k[e];
      L(pos[ed.src], pos[ed.src]) -= k[e];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    if (c >= 2 && sv(c - 2) <= 1e-10 * std::max(1.0, smax))
      throw Error(ErrorCode::SolverFailure,
                  "weighted Laplacian kernel is rank-deficient beyond class count");
    Eigen::VectorXd rho = svd.matrixV().col(c - 1);
    if (rho.sum() < 0) rho = -rho;
    if (rho.minCoeff() <= 0)
      throw Error(ErrorCode::SolverFailure, "Laplacian kernel vector not positive");
    rho /= rho.maxCoeff();
    for (int i = 0; i < c; ++i) logRho(cls[i]) = std::log(rho(i));
  }

  // Solve <y_v, z> + c_class(v) = log rho_v in least squares.
  const int L = static_cast<int>(classes.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nv, n + L);
  Eigen::VectorXd b(nv);
  std::vector<int> classOf(nv);
  for (int ci = 0; ci < L; ++ci)
    for (int v : classes[ci]) classOf[v] = ci;
  for (int v = 0; v < nv; ++v) {
    A.row(v).head(n) = g.point(v).transpose();
    A(v, n + classOf[v]) = 1.0;
    b(v) = logRho(v);
  }
  Eigen::VectorXd sol = A.completeOrthogonalDecomposition().solve(b);
  double loglinResidual = (A * sol - b).lpNorm<Eigen::Infinity>();

  if (loglinResidual > tols.tolLoglin) {
    cert.residual = loglinResidual;
    cert.reason = "no positive state matches the tree constants";
    return cert;
  }

  State x(sol.head(n).array().exp());
  cert.member = true;
  cert.witnessState = x;
  cert.residual = complexBalanceResidual(g, k, x);
  return cert;
}

State birchPoint(const EGraph& g, const RateVector& kMember, const State& xStar,
                 const CompatibilityClass& cls, const Tolerances& tols, int maxIter,
                 double gradTol) {
  (void)g;
  (void)kMember;
  const Eigen::MatrixXd& B = cls.subspace.basis;
  const int d = cls.subspace.dim;
  if (d == 0) return cls.anchor;

  Eigen::VectorXd logStar = xStar.values().array().log();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd x = cls.anchor.values();

  auto energy = [&](const Eigen::VectorXd& xx) {
    return (xx.array() * (xx.array().log() - logStar.array() - 1.0)).sum();
  };

  for (int iter = 0; iter < maxIter; ++iter) {
    Eigen::VectorXd grad = B.transpose() * (x.array().log() - logStar.array()).matrix();
    if (grad.lpNorm<Eigen::Infinity>() <= gradTol)
      return State(x);

    Eigen::MatrixXd H = B.transpose() * x.cwiseInverse().asDiagonal() * B;
    Eigen::VectorXd step = H.llt().solve(-grad);

    // Newton decrement; at machine-precision flatness the energy cannot
    // strictly decrease anymore, so stop on the decrement instead.
    if (-grad.dot(step) <= 1e-24) return State(x);

    double t = 1.0;
    double e0 = energy(x);
    bool moved = false;
    while (t >= 1e-14) {
      Eigen::VectorXd xNew = cls.anchor.values() + B * (u + t * step);
      if ((xNew.array() > 0.0).all() && energy(xNew) <= e0) {
        u += t * step;
        x = xNew;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) {
      if (grad.lpNorm<Eigen::Infinity>() <= 1e3 * gradTol) return State(x);
      throw Error(ErrorCode::ConvergenceFailure, "Birch point line search stalled");
    }
  }
  // Accept a slightly looser gradient if the iteration cap was hit.
  Eigen::VectorXd grad = B.transpose() * (x.array().log() - logStar.array()).matrix();
  if (grad.lpNorm<Eigen::Infinity>() <= 1e3 * gradTol) return State(x);
  (void)tols;
  throw Error(ErrorCode::ConvergenceFailure, "Birch point Newton did not converge");
}

RateVector fiberRateVector(const EGraph& g, const RateVector& kStar, const State& x,
                           const State& xStar) {
  Eigen::VectorXd k(g.edgeCount());
  for (int e = 0; e < g.edgeCount(); ++e) {
    const Eigen::VectorXd y = g.point(g.edges()[e].src);
    k(e) = kStar[e] * monomial(xStar.values(), y) / monomial(x.values(), y);
  }
  return RateVector(g, std::move(k));
}

RateVector phi(const EGraph& g, const FluxVector& j, const State& x) {
  return fluxToRate(g, j, x);
}

std::pair<FluxVector, State> phiInverse(const EGraph& g, const RateVector& kMember,
                                        const CompatibilityClass& cls,
                                        const Tolerances& tols) {
  ToricCertificate cert = toricMembership(g, kMember, tols);
  if (!cert.member)
    throw Error(ErrorCode::NotMember, "rate vector is not complex-balanced");
  State x = birchPoint(g, kMember, *cert.witnessState, cls, tols);
  return {rateToFlux(g, kMember, x), x};
}

ToricCertificate toricMembershipOn(const EGraph& h, const RateVector& hRates,
                                   const EGraph& g, bool requirePositive,
                                   const Tolerances& tols) {
  ToricCertificate cert = toricMembership(h, hRates, tols);
  if (!cert.member) return cert;
  auto realized = realizeOn(h, hRates, g, requirePositive, tols);
  if (!realized) {
    cert.member = false;
    cert.provenInfeasible = true;
    cert.witnessRates.reset();
    cert.reason = requirePositive ? "not realizable on target with positive rates"
                                  : "not R-realizable on target";
    return cert;
  }
  cert.witnessRates = std::move(*realized);
  return cert;
}

RateVector closureApprox(const EGraph& g, const EGraph& gi, const RateVector& ki,
                         const RateVector& kStar, const State& xStar, double eps,
                         const Tolerances& tols) {
  if (!g.isWeaklyReversible())
    throw Error(ErrorCode::NotWeaklyReversible, "ambient graph must be weakly reversible");
  if (!gi.isSubgraphOf(g))
    throw Error(ErrorCode::NotSubgraph, "Gi is not a subgraph of G");
  if (!gi.isWeaklyReversible())
    throw Error(ErrorCode::NotWeaklyReversible, "Gi must be weakly reversible");

  ToricCertificate certI = toricMembership(gi, ki, tols);
  if (!certI.member)
    throw Error(ErrorCode::NotMember, "ki is not complex-balanced on Gi");
  if (!isComplexBalancedState(g, kStar, xStar, tols.tolLoglin))
    throw Error(ErrorCode::NotMember, "kStar/xStar is not a complex-balanced pair on G");
  const State& x1 = *certI.witnessState;

  RateVector fiber = fiberRateVector(g, kStar, x1, xStar);
  Eigen::VectorXd out = eps * fiber.values();

  // Zero-extension of ki over E(G), matched by exact vertex coordinates.
  for (int e = 0; e < gi.edgeCount(); ++e) {
    const Edge& ed = gi.edges()[e];
    int s = g.findVertex(gi.vertices()[ed.src].coords);
    int t = g.findVertex(gi.vertices()[ed.tgt].coords);
    for (int ge = 0; ge < g.edgeCount(); ++ge)
      if (g.edges()[ge].src == s && g.edges()[ge].tgt == t) {
        out(ge) += ki[e];
        break;
      }
  }
  return RateVector(g, std::move(out));
}

}  // namespace crn
