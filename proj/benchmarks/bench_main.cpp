#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "misinfo/dynamics.hpp"
#include "misinfo/graph.hpp"
#include "misinfo/survey.hpp"

namespace {

// To run: ./build/benchmarks/misinfo_bench --benchmark_min_time=0.2

misinfo::SocialGraph random_graph(int n, double mean_degree, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  misinfo::SocialGraph::Builder b;
  for (int i = 0; i < n; ++i) b.add_node("n" + std::to_string(i));
  const auto edges = static_cast<long>(n * mean_degree / 2);
  for (long e = 0; e < edges; ++e) {
    const int x = pick(rng);
    const int y = pick(rng);
    if (x != y) b.add_edge("n" + std::to_string(x), "n" + std::to_string(y));
  }
  return b.build();
}

std::vector<misinfo::NodeState> seeded_states(const misinfo::SocialGraph& g, double alpha) {
  std::vector<misinfo::NodeState> states;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const double l0 = i % 50 == 0 ? alpha : 0.1;
    states.push_back({std::string(g.ids()[i]), l0, l0, true, 0.5});
  }
  return states;
}

void BM_Trust(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 20.0, 1);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<misinfo::NodeIndex> pick(0, static_cast<misinfo::NodeIndex>(g.node_count() - 1));
  for (auto _ : state) {
    const auto i = pick(rng);
    auto j = pick(rng);
    if (j == i) j = (i + 1) % static_cast<misinfo::NodeIndex>(g.node_count());
    benchmark::DoNotOptimize(g.trust(i, j));
  }
}
BENCHMARK(BM_Trust)->Arg(1000)->Arg(100000);

void BM_Step(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 10.0, 3);
  const misinfo::SimParams params{0.7, 0.1, 1};
  auto states = seeded_states(g, params.alpha);
  for (auto _ : state) {
    auto next = misinfo::step(g, states, params);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Step)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_PopulationFraction(benchmark::State& state) {
  const misinfo::Survey survey(
      misinfo::Factor::kFlowKnowledge,
      {misinfo::SurveyQuestion(0.4, {{0.1, 0.05}, {0.2, 0.2}, {0.5, 0.13}, {0.7, 0.12}, {0.9, 0.5}}),
       misinfo::SurveyQuestion(0.6, {{0.1, 0.3}, {0.3, 0.15}, {0.7, 0.15}, {0.9, 0.4}})});
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(misinfo::population_fraction(survey, tau));
    tau = tau >= 1.0 ? 0.0 : tau + 0.001;
  }
}
BENCHMARK(BM_PopulationFraction);

}  // namespace

BENCHMARK_MAIN();
