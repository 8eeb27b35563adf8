#include <benchmark/benchmark.h>

#include "zetakit/chi.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/reference.hpp"
#include "zetakit/roots.hpp"
#include "zetakit/schemes.hpp"

using namespace zetakit;

namespace {

Complex point() { return Complex(Real(0.2), Real(2)); }

void BM_Gamma(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  const Complex s = point();
  for (auto _ : state) benchmark::DoNotOptimize(gamma(s, ctx));
}
BENCHMARK(BM_Gamma)->Arg(64)->Arg(256)->Arg(1024);

void BM_EtaRef(benchmark::State& state) {
  const PrecisionContext ctx(state.range(0));
  const Complex s = point();
  for (auto _ : state) benchmark::DoNotOptimize(eta_ref(s, ctx));
}
BENCHMARK(BM_EtaRef)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Chi(benchmark::State& state) {
  const PrecisionContext ctx(256);
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi(n, ctx));
}
BENCHMARK(BM_Chi)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SymRoots(benchmark::State& state) {
  const PrecisionContext ctx(256);
  SymmetrizedFactorial f;
  for (long j = 0; j < state.range(0); ++j) f.nodes.emplace_back(2 + j);
  for (auto _ : state) benchmark::DoNotOptimize(sym_roots(f, ctx));
}
BENCHMARK(BM_SymRoots)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Dirichlet(benchmark::State& state) {
  const PrecisionContext ctx(256);
  const Complex s = point();
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_partial(s, static_cast<std::size_t>(state.range(0)), ctx));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dirichlet)->Range(1000, 100000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_Combined37(benchmark::State& state) {
  const PrecisionContext ctx(256);
  const Complex s = point();
  const long t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(combined_scheme37(s, {2, 3, 5}, 6, {std::size_t(3 * t), std::size_t(5 * t), std::size_t(9 * t)}, ctx));
}
BENCHMARK(BM_Combined37)->Arg(5)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
