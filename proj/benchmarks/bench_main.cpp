#include "qlcft/extension.hpp"
#include "qlcft/hermite.hpp"
#include "qlcft/norm.hpp"
#include "qlcft/oracle/finite_group.hpp"
#include "qlcft/oracle/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qlcft;

namespace {

const FieldSpec& reference() {
  static const FieldSpec s = FieldSpec::make({3}, {5}, {{3, 2}, {5, 2}});
  return s;
}

void BM_EnumerateExtensions(benchmark::State& state) {
  const auto bound = state.range(0);
  const FieldSpec s = reference().with_min_levels(required_levels(reference(), bound, ExtensionFilter::All));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extensions(s, bound));
}
BENCHMARK(BM_EnumerateExtensions)->Arg(25)->Arg(100)->Arg(400);

void BM_HermiteMod(benchmark::State& state) {
  const IntMatrix rows{{35, 10, 4}, {7, 125, 3}, {50, 15, 625}, {1, 2, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(hermite_form_mod(rows, 3, 15625));
}
BENCHMARK(BM_HermiteMod);

void BM_NormGroupsOfIndex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(norm_groups_of_index(reference(), state.range(0)));
}
BENCHMARK(BM_NormGroupsOfIndex)->Arg(10)->Arg(50);

void BM_SubgroupEnumeration(benchmark::State& state) {
  const oracle::FiniteAbelianGroup g({state.range(0), state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_subgroups(g));
}
BENCHMARK(BM_SubgroupEnumeration)->Arg(5)->Arg(25)->Arg(9);

void BM_Verify(benchmark::State& state) {
  const auto id = static_cast<oracle::TheoremId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify(reference(), id));
  state.SetLabel(oracle::to_string(id));
}
BENCHMARK(BM_Verify)
    ->Arg(static_cast<int>(oracle::TheoremId::THM_1_2_I))
    ->Arg(static_cast<int>(oracle::TheoremId::PROP_3_1))
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
