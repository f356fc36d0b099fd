#include <benchmark/benchmark.h>

#include "ktuple/domatic.hpp"
#include "ktuple/domination.hpp"
#include "ktuple/generators.hpp"
#include "ktuple/theorems.hpp"

namespace ktuple {
namespace {

void BM_GammaGnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto g = gnp(n, 0.5, 42);
  if (!admits_ktuple_set(g, k, Mode::closed)) {
    state.SkipWithError("degree gate fails");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(gamma_xk(g, k).value);
}
BENCHMARK(BM_GammaGnp)->ArgsProduct({{12, 20, 28}, {1, 2}})->Unit(benchmark::kMicrosecond);

void BM_DomaticGnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto g = gnp(n, 0.7, 7);
  for (auto _ : state) benchmark::DoNotOptimize(d_xk(g, k).value);
}
BENCHMARK(BM_DomaticGnp)->ArgsProduct({{10, 16, 22}, {1, 2}})->Unit(benchmark::kMicrosecond);

void BM_DomaticComplete(benchmark::State& state) {
  const auto g = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(d_xk(g, 3).value);
}
BENCHMARK(BM_DomaticComplete)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

void BM_VerifyAll(benchmark::State& state) {
  const auto g = gnp(10, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(g, 2).checks.size());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMicrosecond);

void BM_PredicateClosed(benchmark::State& state) {
  const auto g = gnp(256, 0.3, 11);
  const auto s = greedy_upper_bound(g, 2, Mode::closed);
  for (auto _ : state) benchmark::DoNotOptimize(is_ktuple_dominating(g, s, 2));
}
BENCHMARK(BM_PredicateClosed);

}  // namespace
}  // namespace ktuple

BENCHMARK_MAIN();
