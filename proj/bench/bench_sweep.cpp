// Serial reference vs OpenMP sweeps on the heaviest residual checks.

#include <benchmark/benchmark.h>

#include <span>

#include "hypersine/coset.hpp"
#include "hypersine/hypergroup.hpp"
#include "hypersine/poly.hpp"
#include "hypersine/su2.hpp"

using namespace hypersine;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_PolySine(benchmark::State& state) {
  const auto rec = ThreeTermRecurrence::legendre();
  const PolynomialHypergroup hg(rec, 64);
  const auto pairs = index_pairs(64);
  const auto m = poly_exponential(rec, {0.5, 0.5}, 128);
  const auto f = sine_fn(rec, 1.0, {0.5, 0.5}, 128);
  for (auto _ : state) benchmark::DoNotOptimize(sine_residual(hg, f, m, std::span(pairs), mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
  label(state);
}

void BM_Su2Sine(benchmark::State& state) {
  const Su2Hypergroup hg;
  const auto pairs = index_pairs(100);
  for (auto _ : state)
    benchmark::DoNotOptimize(sine_residual(hg, Su2Sine{1.0, 0.3}, Su2Exponential{0.3}, std::span(pairs), mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
  label(state);
}

void BM_CosetSine(benchmark::State& state) {
  const CosetHypergroup hg;
  const auto pairs = to_coset_pairs(sample_affine_pairs(1, 20000));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sine_residual(hg, coset_sine(1.0, 0.5), coset_exponential(0.5), std::span(pairs), mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
  label(state);
}

}  // namespace

BENCHMARK(BM_PolySine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Su2Sine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetSine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
