#include <benchmark/benchmark.h>

#include "bglab/checker.hpp"
#include "bglab/constructions.hpp"
#include "bglab/group.hpp"
#include "bglab/parser.hpp"

using namespace bglab;

namespace {

  void exhaustive_sweep(benchmark::State& state) {
    auto const   b21 = brandt_monoid_b21();
    auto const   id  = parse_identity("(x1 x2 x3 x4)^2 = (x1 x2 x3 x4)^4");
    CheckOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_identity_exhaustive(b21, id, opts));
  }
  BENCHMARK(exhaustive_sweep)->Arg(1)->Arg(2);

  void block_square(benchmark::State& state) {
    auto const b21 = brandt_monoid_b21();
    auto const id  = parse_identity("v[2,4,5] = v[2,4,5]^2");
    for (auto _ : state) benchmark::DoNotOptimize(check_identity_block(b21, id));
  }
  BENCHMARK(block_square);

  void power_semiring_build(benchmark::State& state) {
    auto const g = make_group(GroupSpec::symmetric(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(power_semiring(g));
  }
  BENCHMARK(power_semiring_build)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
