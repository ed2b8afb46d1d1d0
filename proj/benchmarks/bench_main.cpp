#include <benchmark/benchmark.h>

#include <random>

#include "raag/cube.hpp"
#include "raag/mccool.hpp"
#include "raag/partition.hpp"
#include "raag/word.hpp"

namespace {

raag::DefiningGraph cycle_graph(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return raag::DefiningGraph(names, edges);
}

raag::DefiningGraph edgeless_graph(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return raag::DefiningGraph(names, {});
}

raag::Word random_word(const raag::DefiningGraph& g, std::mt19937_64& rng, std::size_t length) {
  raag::Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(raag::Letter::from_code(static_cast<std::uint32_t>(rng() % (2 * g.vertex_count()))));
  }
  return w;
}

void BM_Reduce(benchmark::State& state) {
  const auto g = cycle_graph(6);
  std::mt19937_64 rng(1);
  const auto w = random_word(g, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(raag::reduce(g, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ConjugacyCanonical(benchmark::State& state) {
  const auto g = cycle_graph(6);
  std::mt19937_64 rng(2);
  const auto w = random_word(g, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(raag::conjugacy_canonical(g, w, 1024));
}
BENCHMARK(BM_ConjugacyCanonical)->RangeMultiplier(2)->Range(8, 64);

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto g = edgeless_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(raag::enumerate_partitions(g));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(2, 4);

void BM_Minimize(benchmark::State& state) {
  const auto g = edgeless_graph(3);
  const raag::McCoolEngine engine(g, {});
  std::mt19937_64 rng(3);
  std::vector<raag::CyclicClass> targets;
  for (int i = 0; i < 2; ++i) targets.push_back(engine.canonical(random_word(g, rng, 12)));
  for (auto _ : state) benchmark::DoNotOptimize(engine.minimize(targets));
}
BENCHMARK(BM_Minimize);

void BM_BuildBall(benchmark::State& state) {
  const auto g = cycle_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(raag::build_ball(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildBall)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
