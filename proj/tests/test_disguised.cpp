#include <doctest.h>

#include <random>

#include "crn/disguised.hpp"
#include "crn/errors.hpp"
#include "support/example_graphs.hpp"

using namespace crn;
using fixtures::rv;

namespace {

SearchBudget quickBudget() {
  SearchBudget b;
  b.starts = 16;
  return b;
}

}  // namespace

TEST_CASE("a toric member is disguised-toric with itself as target") {
  EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(43);
  auto [k, x] = fixtures::randomToricMember(k4, fixtures::k4CycleBasis(), rng);
  DisguisedCertificate cert = disguisedMembership(k4, k, k4, false, quickBudget());
  REQUIRE(cert.member);
  CHECK(cert.equivalenceResidual <= 1e-8);
  CHECK(cert.balanceResidual <= 1e-7);
  CHECK(isComplexBalancedState(*cert.targetGraph, *cert.realizedRates,
                               *cert.steadyState, 1e-7));
}

TEST_CASE("positive rates on the collinear source graph are always members") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int t = 0; t < 5; ++t) {
    Eigen::Vector4d kv;
    for (int i = 0; i < 4; ++i) kv(i) = u(rng);
    RateVector k(line, kv);
    DisguisedCertificate cert = disguisedMembership(line, k, k4, false, quickBudget());
    REQUIRE(cert.member);
    CHECK(dynamicallyEquivalent(line, k, *cert.targetGraph, *cert.realizedRates, 1e-8));
    CHECK(cert.realizedRates->strictlyPositive());
  }
}

TEST_CASE("signed membership matches the quadratic sign condition") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();

  // k12 k43 + k34 k23 = 1 + 1*(-0.5) = 0.5 >= 0: member.
  RateVector member(line, Eigen::Vector4d(1.0, -0.5, 1.0, 1.0));
  DisguisedCertificate yes = disguisedMembership(line, member, k4, true, quickBudget());
  CHECK(yes.member);

  // 1 + 2*(-2) = -3 < 0: not found, full budget burned.
  RateVector outside(line, Eigen::Vector4d(1.0, -2.0, 2.0, 1.0));
  DisguisedCertificate no = disguisedMembership(line, outside, k4, true, quickBudget());
  CHECK_FALSE(no.member);
  CHECK(no.searchExhausted);
}

TEST_CASE("search is deterministic for identical inputs") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  RateVector k(line, Eigen::Vector4d(2.0, 0.7, 1.3, 4.0));
  DisguisedCertificate a = disguisedMembership(line, k, k4, false, quickBudget());
  DisguisedCertificate b = disguisedMembership(line, k, k4, false, quickBudget());
  REQUIRE(a.member);
  REQUIRE(b.member);
  CHECK(a.steadyState->values() == b.steadyState->values());
  CHECK(a.realizedRates->values() == b.realizedRates->values());
}

TEST_CASE("locus search finds a target without being given one") {
  EGraph line = fixtures::lineGraph();
  RateVector k(line, Eigen::Vector4d(1.0, 1.0, 1.0, 1.0));
  DisguisedCertificate cert = disguisedLocusMembership(line, k, false, quickBudget());
  REQUIRE(cert.member);
  CHECK(cert.targetGraph->isSubgraphOf(line.completeGraph()));
  CHECK(cert.targetGraph->isWeaklyReversible());
}

TEST_CASE("positivity precondition and target validation") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  RateVector mixed(line, Eigen::Vector4d(1.0, -1.0, 1.0, 1.0));
  CHECK_THROWS_AS(disguisedMembership(line, mixed, k4, false, quickBudget()), Error);
  RateVector pos(line, Eigen::Vector4d(1, 1, 1, 1));
  CHECK_THROWS_AS(disguisedMembership(line, pos, line, false, quickBudget()), Error);
}

TEST_CASE("fiber path: constant at the witness, class mismatch rejected") {
  EGraph line = fixtures::lineGraph();
  EGraph k4 = fixtures::k4Graph();
  RateVector k(line, Eigen::Vector4d(1.0, 2.0, 0.5, 3.0));
  DisguisedCertificate cert = disguisedMembership(line, k, k4, false, quickBudget());
  REQUIRE(cert.member);

  PathSegment constant = fiberPath(line, k, cert, *cert.steadyState, 5);
  for (const auto& [t, rates] : constant.samples)
    CHECK((rates.values() - k.values()).lpNorm<Eigen::Infinity>() < 1e-12);

  // Move inside the class (direction (1,-1)): first sample still equals k.
  Eigen::Vector2d shifted = cert.steadyState->values() + Eigen::Vector2d(0.1, -0.1);
  PathSegment seg = fiberPath(line, k, cert, State(shifted), 5);
  CHECK(seg.samples.front().second.values() == k.values());

  Eigen::Vector2d outside = cert.steadyState->values() + Eigen::Vector2d(0.3, 0.3);
  CHECK_THROWS_AS(fiberPath(line, k, cert, State(outside), 5), Error);
}

TEST_CASE("three-segment path between two positive members") {
  EGraph line = fixtures::lineGraph();
  RateVector ka(line, Eigen::Vector4d(1.0, 2.0, 0.5, 3.0));
  RateVector kb(line, Eigen::Vector4d(4.0, 0.3, 2.0, 1.0));
  State x0(Eigen::Vector2d(1.0, 1.0));
  PathResult path = connectMembers(line, ka, kb, false, x0, quickBudget(), 8);

  REQUIRE(path.segments.size() == 3);
  CHECK(path.segments[0].kind == PathSegment::Kind::Fiber);
  CHECK(path.segments[1].kind == PathSegment::Kind::Line);
  CHECK(path.segments[2].kind == PathSegment::Kind::Fiber);

  // Endpoints exact, junctions shared exactly.
  CHECK(path.segments[0].samples.front().second.values() == ka.values());
  CHECK(path.segments[2].samples.back().second.values() == kb.values());
  CHECK(path.segments[0].samples.back().second.values() ==
        path.segments[1].samples.front().second.values());
  CHECK(path.segments[1].samples.back().second.values() ==
        path.segments[2].samples.front().second.values());

  REQUIRE(path.certificates.size() == 3 * 8);
  for (const auto& cert : path.certificates) {
    CHECK(cert.member);
    CHECK(cert.equivalenceResidual <= 1e-8);
    CHECK(cert.balanceResidual <= 1e-7);
  }
  for (const auto& seg : path.segments)
    for (const auto& [t, rates] : seg.samples) CHECK(rates.strictlyPositive());
}

TEST_CASE("degenerate path between equal endpoints is an exact palindrome") {
  // Both endpoints transport to the same rate vector at x0, so the line
  // segment is constant and the two fiber segments mirror each other.
  EGraph line = fixtures::lineGraph();
  RateVector k(line, Eigen::Vector4d(1.0, 1.0, 1.0, 1.0));
  State x0(Eigen::Vector2d(1.0, 1.0));
  PathResult path = connectMembers(line, k, k, false, x0, quickBudget(), 4);
  const auto& a = path.segments[0].samples;
  const auto& l = path.segments[1].samples;
  const auto& c = path.segments[2].samples;
  for (const auto& [t, rates] : l)
    CHECK((rates.values() - l.front().second.values()).lpNorm<Eigen::Infinity>() <
          1e-10);
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK((a[i].second.values() - c[c.size() - 1 - i].second.values())
              .lpNorm<Eigen::Infinity>() < 1e-8);
}

TEST_CASE("path sampling refines: max step shrinks with more samples") {
  EGraph line = fixtures::lineGraph();
  RateVector ka(line, Eigen::Vector4d(1.0, 2.0, 0.5, 3.0));
  RateVector kb(line, Eigen::Vector4d(4.0, 0.3, 2.0, 1.0));
  State x0(Eigen::Vector2d(1.0, 1.0));

  auto maxStep = [&](int samples) {
    PathResult p = connectMembers(line, ka, kb, false, x0, quickBudget(), samples);
    double worst = 0.0;
    for (const auto& seg : p.segments)
      for (std::size_t i = 1; i < seg.samples.size(); ++i)
        worst = std::max(worst, (seg.samples[i].second.values() -
                                 seg.samples[i - 1].second.values())
                                    .lpNorm<Eigen::Infinity>());
    return worst;
  };
  CHECK(maxStep(16) >= 3.0 * maxStep(64));
}

TEST_CASE("non-member endpoint raises a membership failure") {
  EGraph line = fixtures::lineGraph();
  RateVector good(line, Eigen::Vector4d(1, 1, 1, 1));
  RateVector bad(line, Eigen::Vector4d(1.0, -2.0, 2.0, 1.0));
  State x0(Eigen::Vector2d(1.0, 1.0));
  SearchBudget tiny;
  tiny.starts = 2;
  tiny.iters = 60;
  CHECK_THROWS_AS(connectMembers(line, good, bad, true, x0, tiny, 4), Error);
}
