#include <doctest.h>

#include <random>

#include "crn/dynamics.hpp"
#include "crn/errors.hpp"
#include "support/example_graphs.hpp"

using namespace crn;
using fixtures::rv;

TEST_CASE("mass-action right-hand side on the 1D two-cycle") {
  EGraph g = fixtures::twoCycle();
  RateVector k(g, Eigen::Vector2d(2.0, 3.0));
  State x(Eigen::VectorXd::Constant(1, 0.5));
  // dx/dt = 2 x^0 (1-0) + 3 x^1 (0-1) = 2 - 3x
  Eigen::VectorXd rhs = massActionRhs(g, k, x);
  CHECK(rhs(0) == doctest::Approx(2.0 - 1.5));
}

TEST_CASE("net vectors include zero entries for sink-only vertices") {
  EGraph g({rv({0}), rv({1})}, {{0, 1}});
  auto nets = netVectors(g, Eigen::VectorXd::Constant(1, 2.0));
  REQUIRE(nets.size() == 2);
  CHECK(nets.at(rv({0}))(0) == doctest::Approx(2.0));
  CHECK(nets.at(rv({1}))(0) == doctest::Approx(0.0));
}

TEST_CASE("a system is equivalent to itself and not to a perturbation") {
  EGraph g = fixtures::lineGraph();
  RateVector k(g, Eigen::Vector4d(1, 2, 3, 4));
  CHECK(equivalenceResidual(g, k, g, k) == 0.0);
  RateVector k2(g, Eigen::Vector4d(1, 2, 3, 5));
  CHECK(equivalenceResidual(g, k, g, k2) > 0.5);
  CHECK(dynamicallyEquivalent(g, k, g, k, 1e-8));
  CHECK_FALSE(dynamicallyEquivalent(g, k, g, k2, 1e-8));
}

TEST_CASE("collinear pair: the forced coefficient map gives equivalence for any rates") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd kt(12);
    for (int i = 0; i < 12; ++i) kt(i) = u(rng);
    RateVector ktv(k4, kt);
    RateVector kv(line, fixtures::lineRatesFromK4(k4, kt));
    CHECK(equivalenceResidual(k4, ktv, line, kv) < 1e-10);
  }
}

TEST_CASE("realization recovers the forced coefficients on the collinear graph") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd kt(12);
    for (int i = 0; i < 12; ++i) kt(i) = u(rng);
    RateVector ktv(k4, kt);
    Eigen::Vector4d expect = fixtures::lineRatesFromK4(k4, kt);

    auto signedK = realizeOn(k4, ktv, line, false);
    REQUIRE(signedK.has_value());
    CHECK((signedK->values() - expect).lpNorm<Eigen::Infinity>() < 1e-8);

    auto positiveK = realizeOn(k4, ktv, line, true);
    bool shouldWork = expect(1) > 1e-8 && expect(2) > 1e-8;
    CHECK(positiveK.has_value() == shouldWork);
  }
}

TEST_CASE("realization fails when a vertex outside the target carries net flow") {
  EGraph g({rv({0}), rv({1}), rv({2})}, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  RateVector k(g, Eigen::VectorXd::Constant(4, 1.0));
  EGraph small({rv({0}), rv({1})}, {{0, 1}, {1, 0}});
  CHECK_FALSE(realizeOn(g, k, small, false).has_value());
}

TEST_CASE("rate vector and state validation") {
  EGraph g = fixtures::twoCycle();
  CHECK_THROWS_AS(RateVector(g, Eigen::Vector3d(1, 2, 3)), Error);
  CHECK_THROWS_AS(State(Eigen::Vector2d(1.0, 0.0)), Error);
  CHECK_THROWS_AS(State(Eigen::Vector2d(1.0, -2.0)), Error);
  RateVector mixed(g, Eigen::Vector2d(1.0, -2.0));
  CHECK_FALSE(mixed.strictlyPositive());
}
