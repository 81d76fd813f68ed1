#include <benchmark/benchmark.h>

#include <random>

#include "crn/disguised.hpp"
#include "support/example_graphs.hpp"

namespace {

void BM_ToricMembership(benchmark::State& state) {
  crn::EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(1);
  auto [k, x] = fixtures::randomToricMember(k4, fixtures::k4CycleBasis(), rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(crn::toricMembership(k4, k));
}
BENCHMARK(BM_ToricMembership);

void BM_BirchPoint(benchmark::State& state) {
  crn::EGraph k4 = fixtures::k4Graph();
  std::mt19937_64 rng(2);
  auto [k, xStar] = fixtures::randomToricMember(k4, fixtures::k4CycleBasis(), rng);
  auto S = k4.stoichiometricSubspace();
  crn::State anchor(Eigen::Vector2d(2.0, 0.5));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        crn::birchPoint(k4, k, xStar, crn::CompatibilityClass{anchor, S}));
}
BENCHMARK(BM_BirchPoint);

void BM_WrEnumerationK4(benchmark::State& state) {
  crn::EGraph k4 = fixtures::k4Graph();
  for (auto _ : state)
    benchmark::DoNotOptimize(crn::weaklyReversibleSubgraphs(k4, SIZE_MAX));
}
BENCHMARK(BM_WrEnumerationK4);

void BM_DisguisedMembership(benchmark::State& state) {
  crn::EGraph line = fixtures::lineGraph();
  crn::EGraph k4 = fixtures::k4Graph();
  crn::RateVector k(line, Eigen::Vector4d(1.0, 2.0, 0.5, 3.0));
  crn::SearchBudget budget;
  budget.starts = 8;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        crn::disguisedMembership(line, k, k4, false, budget));
}
BENCHMARK(BM_DisguisedMembership);

}  // namespace

BENCHMARK_MAIN();
