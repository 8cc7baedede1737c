#include <benchmark/benchmark.h>

#include "crnreal/cone.hpp"
#include "crnreal/generator.hpp"

namespace {

using crnreal::AdjacencyTest;

crnreal::Matrix net_matrix(crnreal::GenType type, std::size_t classes) {
  const auto sys = crnreal::generate(crnreal::default_spec(type, classes, 42));
  return crnreal::net_reaction_data(sys).net();
}

void BM_ExtremeRays(benchmark::State& state, AdjacencyTest test) {
  const auto w = net_matrix(crnreal::GenType::TypeII,
                            static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crnreal::extreme_rays(w, test));
  }
  state.counters["m"] = static_cast<double>(w.cols());
}

void BM_ExtremeRaysBruteforce(benchmark::State& state) {
  const auto w = net_matrix(crnreal::GenType::TypeII,
                            static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crnreal::extreme_rays_bruteforce(w));
  }
  state.counters["m"] = static_cast<double>(w.cols());
}

}  // namespace

BENCHMARK_CAPTURE(BM_ExtremeRays, combinatorial, AdjacencyTest::Combinatorial)
    ->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_ExtremeRays, algebraic, AdjacencyTest::Algebraic)
    ->DenseRange(2, 5);
BENCHMARK(BM_ExtremeRaysBruteforce)->DenseRange(2, 5);
