// Serial reference against OpenMP kernel for each parallel routine.
#include <benchmark/benchmark.h>

#include "utlab/catalog.hpp"
#include "utlab/num_theory.hpp"
#include "utlab/semigroup.hpp"
#include "utlab/set_orbits.hpp"
#include "utlab/ut_deciders.hpp"

using namespace utlab;

namespace {

PermGroup cat(const std::string& name) { return build(parse_group_name(name)); }

UtBudget naive_budget() {
  UtBudget b;
  b.method = "naive";
  return b;
}

void BM_naive_serial(benchmark::State& st) {
  const auto G = cat("M11");
  for (auto _ : st) benchmark::DoNotOptimize(has_kut_naive_serial(G, 4, naive_budget()));
}
void BM_naive_omp(benchmark::State& st) {
  const auto G = cat("M11");
  for (auto _ : st) benchmark::DoNotOptimize(has_kut_naive(G, 4, naive_budget()));
}

void BM_extension_serial(benchmark::State& st) {
  const auto G = cat("AGL(1,13)");
  const auto bad = orbit_of_set(G, KSet{1, 2, 4});
  const SubPartition seed(13, {{1}, {2}, {3}});
  for (auto _ : st) benchmark::DoNotOptimize(subpartition_extension_decider_serial(G, bad, seed));
}
void BM_extension_omp(benchmark::State& st) {
  const auto G = cat("AGL(1,13)");
  const auto bad = orbit_of_set(G, KSet{1, 2, 4});
  const SubPartition seed(13, {{1}, {2}, {3}});
  for (auto _ : st) benchmark::DoNotOptimize(subpartition_extension_decider(G, bad, seed));
}

void BM_closure_serial(benchmark::State& st) {
  const auto gens = generators_with(Transformation::parse("1,4,5,2,2,2,2,2,2"), cat("ASL(2,3)"));
  for (auto _ : st) benchmark::DoNotOptimize(semigroup_closure_serial(gens));
}
void BM_closure_omp(benchmark::State& st) {
  const auto gens = generators_with(Transformation::parse("1,4,5,2,2,2,2,2,2"), cat("ASL(2,3)"));
  for (auto _ : st) benchmark::DoNotOptimize(semigroup_closure(gens));
}

void BM_sieve_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sieve_problem1_serial(static_cast<std::uint64_t>(st.range(0))));
}
void BM_sieve_omp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sieve_problem1(static_cast<std::uint64_t>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_naive_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_naive_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extension_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extension_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_omp)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
