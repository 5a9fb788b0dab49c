// Microbenchmarks for the hot paths: weight multiplicities, tensor
// decomposition, cone membership, and the bounded poset enumeration.

#include <benchmark/benchmark.h>

#include <vector>

#include "orthocompact/charring.hpp"
#include "orthocompact/orders.hpp"
#include "orthocompact/posets.hpp"

using namespace orthocompact;

namespace {

void bm_weight_mults(benchmark::State& state) {
  const RankedContext ctx(3);
  const Weight la({static_cast<int>(state.range(0)), 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(weight_mults(ctx, la));
}
BENCHMARK(bm_weight_mults)->Arg(1)->Arg(2)->Arg(3);

void bm_tensor(benchmark::State& state) {
  const RankedContext ctx(3);
  const Weight la({1, 1, 0});
  const Weight mu({0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tensor(ctx, la, mu));
}
BENCHMARK(bm_tensor);

void bm_dominant_below(benchmark::State& state) {
  const RankedContext ctx(static_cast<int>(state.range(0)));
  Weight la = zero_weight(ctx.rank());
  la.coeffs.front() = 2;
  la.coeffs.back() = 2;
  for (auto _ : state) benchmark::DoNotOptimize(dominant_below(ctx, la));
}
BENCHMARK(bm_dominant_below)->Arg(3)->Arg(4)->Arg(5);

void bm_nphi_membership(benchmark::State& state) {
  const RankedContext ctx(4);
  const Weight la({1, 0, 0, 0});
  const RootVec tau = rootvec_from_alpha({3, 3, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(nphi_membership(ctx, la, tau));
}
BENCHMARK(bm_nphi_membership);

void bm_enum_T2(benchmark::State& state) {
  const RankedContext ctx(4);
  const IndexSet I = {1, 2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(enum_T2(ctx, I, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_enum_T2)->Arg(3)->Arg(5);

void bm_poset_T2(benchmark::State& state) {
  const RankedContext ctx(3);
  const IndexSet I = {1};
  for (auto _ : state)
    benchmark::DoNotOptimize(poset_T2(ctx, I, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_poset_T2)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
