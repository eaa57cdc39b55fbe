#include <benchmark/benchmark.h>

#include "ttr/canonical.hpp"
#include "ttr/coeffs.hpp"
#include "ttr/compare.hpp"
#include "ttr/cutsets.hpp"
#include "ttr/enumerate.hpp"
#include "ttr/families.hpp"

namespace {

void BM_CoeffsBruteForce(benchmark::State& state) {
  const auto g = ttr::family_A(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ttr::coeffs_bruteforce(g));
}
BENCHMARK(BM_CoeffsBruteForce)->Arg(6)->Arg(7);

void BM_CoeffsDecomposition(benchmark::State& state) {
  const auto g = ttr::family_A(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ttr::coeffs_decomposition(g));
}
BENCHMARK(BM_CoeffsDecomposition)->DenseRange(6, 10);

void BM_CanonicalKey(benchmark::State& state) {
  const auto g = ttr::family_Aprime(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ttr::canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(6, 9);

void BM_EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = ttr::num_slots(n) - 2;
  for (auto _ : state) benchmark::DoNotOptimize(ttr::enumerate_gnm(n, m));
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(5, 7);

void BM_MinimalCutsets(benchmark::State& state) {
  const auto g = ttr::family_Aprime(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ttr::enumerate_minimal_cutsets(g));
}
BENCHMARK(BM_MinimalCutsets)->DenseRange(6, 9);

void BM_ClassifyPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ca = ttr::coeffs(ttr::family_A(n, 2));
  const auto cp = ttr::coeffs(ttr::family_Aprime(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ttr::classify_pair(ca, cp));
}
BENCHMARK(BM_ClassifyPair)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
