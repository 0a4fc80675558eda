#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "oneq/catalog.hpp"
#include "oneq/classify.hpp"
#include "oneq/simulator.hpp"
#include "oneq/witness.hpp"

namespace {

using namespace oneq;

void BM_SolveF1(benchmark::State& state) {
  const auto cs = build_constraints(make_f1(static_cast<int>(state.range(0))).function);
  for (auto _ : state) benchmark::DoNotOptimize(solve_feasibility(cs));
}
BENCHMARK(BM_SolveF1)->Arg(4)->Arg(8)->Arg(12);

void BM_SolveRandom(benchmark::State& state) {
  testing::Rng rng(7);
  std::vector<ConstraintSystem> systems;
  for (int i = 0; i < 64; ++i) systems.push_back(build_constraints(testing::random_mixed(rng, 6)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_feasibility(systems[i++ % systems.size()]));
}
BENCHMARK(BM_SolveRandom);

void BM_GramWitnessF5(benchmark::State& state) {
  const auto e = make_f5(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_gram_witness(e.function, e.certificate));
}
BENCHMARK(BM_GramWitnessF5)->Arg(1)->Arg(2)->Arg(3);

void BM_SimulateF1(benchmark::State& state) {
  const auto e = make_f1(static_cast<int>(state.range(0)));
  const auto p = build_projector_float(build_gram_witness(e.function, e.certificate));
  for (auto _ : state) benchmark::DoNotOptimize(run_algorithm1(e.function, e.certificate, p));
}
BENCHMARK(BM_SimulateF1)->Arg(8)->Arg(12);

void BM_CanonicalForm(benchmark::State& state) {
  testing::Rng rng(9);
  const auto f = testing::random_partial(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(f));
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(4)->Arg(5);

void BM_ScanTotal3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_total(3, {.threads = 1}));
}
BENCHMARK(BM_ScanTotal3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
