#include <benchmark/benchmark.h>

#include "negacode/eaqecc.hpp"
#include "negacode/family.hpp"
#include "negacode/gf_oracle.hpp"

namespace {

using namespace negacode;

void BM_AllCosets(benchmark::State& state) {
  // n = 2(q^2 + 1)/a with q = 125, a = 26 (the largest published length).
  const CosetContext ctx(1202, 125);
  for (auto _ : state) benchmark::DoNotOptimize(all_cosets(ctx));
}
BENCHMARK(BM_AllCosets);

void BM_Verify(benchmark::State& state) {
  const FamilyInput in{5, 4, static_cast<u64>(state.range(0)), FamilyCase::I};
  for (auto _ : state) benchmark::DoNotOptimize(verify(in));
}
BENCHMARK(BM_Verify)->DenseRange(1, 4);

void BM_Sweep(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(7, 6, threads));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BruteForceDistance(benchmark::State& state) {
  // [26, k] codes over GF(25); k controls the enumeration size.
  const FamilyInput in{1, 2, 1, FamilyCase::I};
  const FamilyContext fc = derive_context(in);
  const NegacyclicRoot root = primitive_2n_root(*fc.field, fc.n);
  const CosetContext ctx(fc.n, fc.q);
  const auto cosets = all_cosets(ctx);
  std::vector<Residue> reps;
  u64 size = 0;
  for (const auto& c : cosets) {
    if (fc.n - size - c.elements.size() < static_cast<u64>(state.range(0))) continue;
    reps.push_back(c.representative);
    size += c.elements.size();
  }
  const Poly g = generator_polynomial(root, make_defining_set(ctx, reps));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_distance(root, g, fc.n));
  state.counters["k"] = static_cast<double>(fc.n - size);
}
BENCHMARK(BM_BruteForceDistance)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
