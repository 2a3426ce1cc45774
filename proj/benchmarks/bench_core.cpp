// Microbenchmarks for the hot path: local field evaluation, single-spin
// updates, whole sweeps, and the end-to-end sample pipeline. The headline
// number is updates per second at 64 bits.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "pgrn/coupling.hpp"
#include "pgrn/oracle.hpp"
#include "pgrn/sampler.hpp"
#include "pgrn/spec.hpp"
#include "pgrn/stats.hpp"

namespace {

pgrn::GrngSpec spec_for(int n_bits, int precision = 0) {
  pgrn::GrngSpec s;
  s.n_bits = n_bits;
  s.precision = precision;
  return s;
}

void bm_field_eval(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(1)));
  const pgrn::CouplingSet c = pgrn::build_couplings(spec);
  const pgrn::FieldEvaluator f(c);
  pgrn::NetworkState st = pgrn::init_state(spec.n_bits, 7);
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.field(st.g, st.s[static_cast<std::size_t>(i)], i));
    i = (i + 1) % spec.n_bits;
  }
}
BENCHMARK(bm_field_eval)->Args({64, 0})->Args({64, 10})->Args({16, 0});

void bm_field_eval_dense(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const pgrn::CouplingSet c = pgrn::build_couplings(spec);
  pgrn::NetworkState st = pgrn::init_state(spec.n_bits, 7);
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgrn::local_field_dense(c, st.s, i));
    i = (i + 1) % spec.n_bits;
  }
}
BENCHMARK(bm_field_eval_dense)->Arg(64)->Arg(16);

void bm_gibbs_update(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const pgrn::CouplingSet c = pgrn::build_couplings(spec);
  const pgrn::FieldEvaluator f(c);
  pgrn::NetworkState st = pgrn::init_state(spec.n_bits, 7);
  int i = 0;
  for (auto _ : state) {
    pgrn::gibbs_update(st, f, i);
    i = (i + 1) % spec.n_bits;
  }
  benchmark::DoNotOptimize(st.g);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_gibbs_update)->Arg(64)->Arg(8);

void bm_sweep(benchmark::State& state) {
  const auto spec = spec_for(64);
  const pgrn::CouplingSet c = pgrn::build_couplings(spec);
  const pgrn::FieldEvaluator f(c);
  pgrn::NetworkState st = pgrn::init_state(64, 7);
  const auto order = state.range(0) == 0 ? pgrn::SweepOrder::fixed
                                         : pgrn::SweepOrder::random_scan;
  for (auto _ : state) pgrn::gibbs_sweep(st, f, order);
  benchmark::DoNotOptimize(st.g);
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(bm_sweep)->Arg(0)->Arg(1);

void bm_autonomous_ns(benchmark::State& state) {
  const auto spec = spec_for(64);
  const pgrn::CouplingSet c = pgrn::build_couplings(spec);
  const pgrn::FieldEvaluator f(c);
  pgrn::NetworkState st = pgrn::init_state(64, 7);
  for (auto _ : state)
    pgrn::autonomous_run(st, f, 1000.0, 1.0 / 380.0);
  benchmark::DoNotOptimize(st.g);
}
BENCHMARK(bm_autonomous_ns);

void bm_generate(benchmark::State& state) {
  auto spec = spec_for(static_cast<int>(state.range(0)));
  spec.spacing_sweeps = 8;
  pgrn::GenerateOptions opts;
  opts.burn_in_sweeps = 64;
  const auto count = static_cast<std::uint64_t>(state.range(1));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const pgrn::SampleStream s = pgrn::generate(spec, count, seed++, opts);
    benchmark::DoNotOptimize(s.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(bm_generate)->Args({64, 4096})->Args({8, 4096})->Unit(benchmark::kMillisecond);

void bm_enumerate(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const pgrn::CouplingSet c = pgrn::build_couplings(spec);
  for (auto _ : state) {
    const pgrn::ExactDistribution d = pgrn::enumerate_boltzmann(c);
    benchmark::DoNotOptimize(d.pmf.data());
  }
}
BENCHMARK(bm_enumerate)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

void bm_analyze(benchmark::State& state) {
  auto spec = spec_for(64);
  spec.spacing_sweeps = 1;
  const pgrn::SampleStream s = pgrn::generate(spec, 100'000, 3);
  for (auto _ : state) {
    const pgrn::AnalysisReport rep = pgrn::analyze_stream(s);
    benchmark::DoNotOptimize(rep.rmse_normalized);
  }
}
BENCHMARK(bm_analyze)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
