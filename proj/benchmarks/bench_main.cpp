#include <benchmark/benchmark.h>

#include "profin/boolean_power.hpp"
#include "profin/inverse_system.hpp"
#include "profin/lattice.hpp"
#include "profin/measure.hpp"
#include "profin/module_ring.hpp"
#include "profin/small_groups.hpp"

using namespace profin;

namespace {

GroupPtr by_index(std::int64_t i) {
  switch (i) {
    case 0: return groups::symmetric(3);
    case 1: return groups::symmetric(4);
    case 2: return groups::heisenberg(3);
    default: return groups::alternating(5);
  }
}

void BM_CommutingPairs(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commuting_pairs(g));
  state.SetLabel(g->name());
}
BENCHMARK(BM_CommutingPairs)->DenseRange(0, 3);

void BM_EnumerateSubgroups(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g));
  state.SetLabel(g->name());
}
BENCHMARK(BM_EnumerateSubgroups)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_NeumannSearch(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(neumann_search(g));
  state.SetLabel(g->name());
}
BENCHMARK(BM_NeumannSearch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ConjugateSpread(benchmark::State& state) {
  const auto g = by_index(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_spread(g));
  state.SetLabel(g->name());
}
BENCHMARK(BM_ConjugateSpread)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_RhoWedge(benchmark::State& state) {
  const auto g = groups::heisenberg(3);
  for (auto _ : state) benchmark::DoNotOptimize(rho_wedge(g));
}
BENCHMARK(BM_RhoWedge);

void BM_IdealCorrespondence(benchmark::State& state) {
  const auto base = groups::symmetric(3);
  const auto ring = FiniteBooleanRing::with_atoms(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ideal_correspondence(base, ring));
}
BENCHMARK(BM_IdealCorrespondence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CpSequenceA5Power(benchmark::State& state) {
  const auto sys = direct_power_system(groups::alternating(5), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cp_sequence(sys));
}
BENCHMARK(BM_CpSequenceA5Power)->Unit(benchmark::kMillisecond);

void BM_RingConstructRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = groups::cyclic(n);
  std::vector<gfp::Matrix> mats;
  for (ElementId h = 0; h < n; ++h) {
    gfp::Matrix m(n, gfp::Vec(n, 0));
    for (ElementId x = 0; x < n; ++x) m[x][g->mul(x, h)] = 1;
    mats.push_back(std::move(m));
  }
  auto action = std::make_shared<const GModuleAction>(GModuleAction::create(g, 3, n, mats));
  gfp::Vec v(n, 0);
  v[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ring_construct(action, v));
}
BENCHMARK(BM_RingConstructRegular)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
