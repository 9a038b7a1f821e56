#include <benchmark/benchmark.h>

#include "pmvlab/corpus.hpp"
#include "pmvlab/ortho.hpp"
#include "pmvlab/verify.hpp"

using namespace pmvlab;

static void BM_CheckAxiomsFinite(benchmark::State& state) {
  const auto m = make_finite_gamma({static_cast<int>(state.range(0)), 2}).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(m).passed);
  state.SetComplexityN(static_cast<std::int64_t>(m.size()));
}
BENCHMARK(BM_CheckAxiomsFinite)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Complexity();

static void BM_EnumerateIdeals(benchmark::State& state) {
  const auto m = make_finite_gamma(std::vector<int>(static_cast<std::size_t>(state.range(0)), 2)).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(m).size());
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(1, 3);

static void BM_SampledAxiomsLexp(benchmark::State& state) {
  const GammaAlgebra ga(corpus_document("lexp").presentation.value());
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms_sampled(ga, static_cast<std::size_t>(state.range(0)), 7).passed);
}
BENCHMARK(BM_SampledAxiomsLexp)->Arg(1000)->Arg(10000);

static void BM_LgroupLaws(benchmark::State& state) {
  const auto family = chain_kind_presentations();
  const auto& p = family.at(static_cast<std::size_t>(state.range(0))).second;
  state.SetLabel(family.at(static_cast<std::size_t>(state.range(0))).first);
  for (auto _ : state) benchmark::DoNotOptimize(check_lgroup_laws(p, 1000, 7).passed);
}
BENCHMARK(BM_LgroupLaws)->DenseRange(0, 4);

static void BM_OrthocompleteLexp(benchmark::State& state) {
  const auto p = corpus_document("lexp").presentation.value();
  for (auto _ : state) benchmark::DoNotOptimize(orthocomplete_group(p).completed.linkage.size());
}
BENCHMARK(BM_OrthocompleteLexp);

BENCHMARK_MAIN();
