#include <benchmark/benchmark.h>

#include "orlicz_lab/norm_spec.hpp"
#include "orlicz_lab/orlicz.hpp"
#include "orlicz_lab/parallel.hpp"
#include "orlicz_lab/registry.hpp"
#include "orlicz_lab/subgrad.hpp"

using namespace orlicz_lab;

namespace {

struct Instance {
  ConvexFunctionOracle f;
  DiscreteProbabilitySpace sp;
  VectorField u;
};

Instance make_instance(std::size_t atoms) {
  Rng rng = make_rng(7);
  auto sp = DiscreteProbabilitySpace::random(atoms, rng);
  auto u = VectorField::random_gaussian(atoms, 3, rng);
  return {registry::plog(2.0, NormSpec::parse("euclidean"), 3), std::move(sp), std::move(u)};
}

void BM_LuxemburgFunctionalSerial(benchmark::State& state) {
  const auto in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_functional_serial(in.f, in.sp, in.u, 1.3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LuxemburgFunctionalParallel(benchmark::State& state) {
  const auto in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_functional(in.f, in.sp, in.u, 1.3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

SearchConfig sphere_config(std::int64_t points_per_dim) {
  SearchConfig cfg;
  cfg.sphere_points_per_dim = static_cast<int>(points_per_dim);
  return cfg;
}

void BM_SphereAverageSerial(benchmark::State& state) {
  const auto f = registry::hinge_power(1.0, NormSpec::parse("l1"), 2);
  const auto cfg = sphere_config(state.range(0));
  const Vec x = {0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(sphere_average_serial(f, x, cfg));
}

void BM_SphereAverageParallel(benchmark::State& state) {
  const auto f = registry::hinge_power(1.0, NormSpec::parse("l1"), 2);
  const auto cfg = sphere_config(state.range(0));
  const Vec x = {0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(sphere_average_subgradient(f, x, cfg).y);
}

}  // namespace

BENCHMARK(BM_LuxemburgFunctionalSerial)->RangeMultiplier(8)->Range(64, 1 << 18);
BENCHMARK(BM_LuxemburgFunctionalParallel)->RangeMultiplier(8)->Range(64, 1 << 18);
BENCHMARK(BM_SphereAverageSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_SphereAverageParallel)->Arg(256)->Arg(4096);

BENCHMARK_MAIN();
