#include <benchmark/benchmark.h>

#include "crnreal/deficiency_one.hpp"
#include "crnreal/generator.hpp"

namespace {

void BM_Realize(benchmark::State& state, crnreal::GenType type) {
  const auto sys = crnreal::generate(crnreal::default_spec(
      type, static_cast<std::size_t>(state.range(0)), 7));
  const auto data = crnreal::net_reaction_data(sys);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crnreal::realize_def_one(data));
  }
  state.counters["m"] = static_cast<double>(data.size());
}

void BM_SingleClass(benchmark::State& state) {
  crnreal::GenSpec spec =
      crnreal::default_spec(crnreal::GenType::SingleClass, 1, 7);
  spec.class_sizes = {static_cast<std::size_t>(state.range(0))};
  spec.dimension = crnreal::required_dimension(spec);
  const auto data = crnreal::net_reaction_data(crnreal::generate(spec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crnreal::realize_def_one(data));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Realize, type1, crnreal::GenType::TypeI)->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_Realize, type2, crnreal::GenType::TypeII)->DenseRange(2, 5);
BENCHMARK(BM_SingleClass)->DenseRange(3, 7);
