#include <doctest.h>

#include <random>

#include "crn/errors.hpp"
#include "crn/flux.hpp"
#include "support/example_graphs.hpp"

using namespace crn;
using fixtures::rv;

TEST_CASE("cycle fluxes are complex balanced") {
  std::mt19937_64 rng(3);
  EGraph k4 = fixtures::k4Graph();
  for (int t = 0; t < 20; ++t) {
    FluxVector j = fixtures::cycleFlux(k4, fixtures::k4CycleBasis(), rng);
    CHECK(j.strictlyPositive());
    CHECK(fluxBalanceResidual(k4, j) < 1e-12);
    CHECK(isComplexBalancedFlux(k4, j, 1e-8));
  }
}

TEST_CASE("unbalanced flux is rejected") {
  EGraph g = fixtures::twoCycle();
  FluxVector j(g, Eigen::Vector2d(1.0, 3.0));
  CHECK(fluxBalanceResidual(g, j) > 0.3);
  CHECK_FALSE(isComplexBalancedFlux(g, j, 1e-8));
}

TEST_CASE("rate/flux conversion is a roundtrip at any state") {
  std::mt19937_64 rng(5);
  EGraph k4 = fixtures::k4Graph();
  for (int t = 0; t < 20; ++t) {
    FluxVector j = fixtures::cycleFlux(k4, fixtures::k4CycleBasis(), rng);
    State x = fixtures::randomState(2, rng);
    RateVector k = fluxToRate(k4, j, x);
    FluxVector back = rateToFlux(k4, k, x);
    CHECK((back.values() - j.values()).lpNorm<Eigen::Infinity>() <
          1e-10 * j.values().lpNorm<Eigen::Infinity>());
  }
}

TEST_CASE("flux equivalence matches dynamical equivalence of the flux weights") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  Eigen::VectorXd jt(12);
  for (int i = 0; i < 12; ++i) jt(i) = u(rng);
  FluxVector jk4(k4, jt);
  FluxVector jline(line, fixtures::lineRatesFromK4(k4, jt));
  CHECK(fluxEquivalent(k4, jk4, line, jline, 1e-8));
}

TEST_CASE("flux membership requires weak reversibility, positivity and balance") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(13);

  FluxVector good = fixtures::cycleFlux(k4, fixtures::k4CycleBasis(), rng);
  auto realized = fluxMembership(k4, good, line, false);
  CHECK(realized.has_value());

  // Balanced but not strictly positive after zeroing an edge: rejected.
  Eigen::VectorXd z = good.values();
  z(0) = 0.0;
  CHECK_FALSE(fluxMembership(k4, FluxVector(k4, z), line, false).has_value());

  // Positive but unbalanced: rejected.
  Eigen::VectorXd u2 = good.values();
  u2(0) += 1.0;
  CHECK_FALSE(fluxMembership(k4, FluxVector(k4, u2), line, false).has_value());

  // Non weakly reversible source graph: error.
  RateVector kl(line, Eigen::Vector4d(1, 1, 1, 1));
  FluxVector jl(line, Eigen::Vector4d(1, 1, 1, 1));
  CHECK_THROWS_AS(fluxMembership(line, jl, k4, false), Error);
}
