#include <benchmark/benchmark.h>

#include "tensorrest/tensorrest.hpp"

using namespace tensorrest;

namespace {

Bundle base_for(int which) {
  switch (which) {
    case 0: return from_semilattice(chain_semilattice(3));
    case 1: return from_semilattice(diamond_semilattice());
    case 2: return from_semilattice(boolean_ideal_semilattice(2));
    default: return finset_monoidal(2);
  }
}

const char* base_name(int which) {
  static const char* names[] = {"chain3", "diamond", "boolean2", "finset2"};
  return names[which];
}

void BM_SConstruction(benchmark::State& state) {
  Bundle b = base_for(static_cast<int>(state.range(0)));
  state.SetLabel(base_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_s_construction(b.category, *b.monoidal));
}
BENCHMARK(BM_SConstruction)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_TRAxioms(benchmark::State& state) {
  SCategory s = [&] {
    Bundle b = base_for(static_cast<int>(state.range(0)));
    return build_s_construction(b.category, *b.monoidal);
  }();
  const Bundle& x = s.carrier();
  state.SetLabel(base_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_TR_axioms(x.category, *x.monoidal, *x.restriction));
}
BENCHMARK(BM_TRAxioms)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_TRAxiomsFinpar(benchmark::State& state) {
  Bundle p = finpar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_TR_axioms(p.category, *p.monoidal, *p.restriction));
}
BENCHMARK(BM_TRAxiomsFinpar)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_FindIsomorphism(benchmark::State& state) {
  Semilattice l = static_cast<int>(state.range(0)) == 0 ? chain_semilattice(3) : boolean_ideal_semilattice(2);
  SCategory s = build_s_construction(from_semilattice(l).category, *from_semilattice(l).monoidal);
  Bundle d = depressing_downsets(l);
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(s.carrier(), d, StructureFlags{true, true, false}));
}
BENCHMARK(BM_FindIsomorphism)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
