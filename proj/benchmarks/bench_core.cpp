#include "restheory/dist.hpp"
#include "restheory/gen.hpp"
#include "restheory/monotone.hpp"
#include "restheory/order.hpp"
#include "restheory/theory.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace restheory;

namespace {

ResourceTheory union_monoid(std::size_t ground) {
  return build(FamilySpec{"union-monoid", ground, "", {}, std::nullopt}, 1);
}

void BM_Validate(benchmark::State& state) {
  const ResourceTheory t = union_monoid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(t));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(t.size()));
}
BENCHMARK(BM_Validate)->DenseRange(2, 6)->Complexity();

void BM_ResourceOrder(benchmark::State& state) {
  const ResourceTheory t = union_monoid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resource_order(t));
}
BENCHMARK(BM_ResourceOrder)->DenseRange(2, 6);

void BM_Yield(benchmark::State& state) {
  auto t = std::make_shared<const ResourceTheory>(union_monoid(static_cast<std::size_t>(state.range(0))));
  const OrderedResources ctx = OrderedResources::from_theory(t);
  const PartialValuation fw = random_valuation(ctx, 3, false, DomainMode::random_subset);
  for (auto _ : state) benchmark::DoNotOptimize(yield(ctx, fw));
}
BENCHMARK(BM_Yield)->DenseRange(2, 6);

void BM_BuildKDist(benchmark::State& state) {
  const DeterministicTheory base(union_monoid(2));
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_k_dist(base, k, false));
}
BENCHMARK(BM_BuildKDist)->DenseRange(2, 4);

}  // namespace
BENCHMARK_MAIN();
