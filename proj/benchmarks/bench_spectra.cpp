#include <benchmark/benchmark.h>

#include "gspec/asymptotics.hpp"
#include "gspec/catalog.hpp"
#include "gspec/jacobi.hpp"
#include "gspec/periodic.hpp"
#include "gspec/reduction.hpp"
#include "gspec/schur.hpp"

using namespace gspec;

namespace {

void BM_ReduceComplete(benchmark::State& st) {
  const auto g = build_complete(static_cast<int>(st.range(0)));
  const TailSpec t{1, 1.0, {}};
  for (auto _ : st) benchmark::DoNotOptimize(reduce_single_tail(g, t));
}
BENCHMARK(BM_ReduceComplete)->Arg(8)->Arg(32)->Arg(128);

void BM_JostAnalysis(benchmark::State& st) {
  std::vector<double> b, a;
  for (int i = 0; i < st.range(0); ++i) {
    b.push_back(0.1 * (i % 7) - 0.3);
    a.push_back(0.8 + 0.05 * (i % 5));
  }
  const FiniteRankJacobi j(b, a);
  for (auto _ : st) benchmark::DoNotOptimize(analyze_jost(j));
}
BENCHMARK(BM_JostAnalysis)->Arg(2)->Arg(8)->Arg(24);

void BM_SpectralMeasure(benchmark::State& st) {
  const FiniteRankJacobi j({0.3, -0.7, 0.2}, {1.4, 0.6, 1.2});
  for (auto _ : st) benchmark::DoNotOptimize(spectral_measure(j));
}
BENCHMARK(BM_SpectralMeasure);

void BM_PeriodicBands(benchmark::State& st) {
  const PeriodicJacobi j({0, 0, 0, 0}, {1.4142135623730951, 1, 1, 1.4142135623730951});
  for (auto _ : st) {
    benchmark::DoNotOptimize(essential_bands(j));
    benchmark::DoNotOptimize(classify_gap_roots(j));
  }
}
BENCHMARK(BM_PeriodicBands);

void BM_SchwenkFlower(benchmark::State& st) {
  const auto g = build_flower(std::vector<int>(static_cast<std::size_t>(st.range(0)), 4));
  for (auto _ : st) benchmark::DoNotOptimize(schwenk_characteristic(g));
}
BENCHMARK(BM_SchwenkFlower)->Arg(2)->Arg(4)->Arg(6);

void BM_FiniteSectionDense(benchmark::State& st) {
  const TailedGraph tg = make_tailed(build_star({1, 1, 1, 1, 1}), {TailSpec{6, 1.0, {}}});
  for (auto _ : st) benchmark::DoNotOptimize(section_eigenvalues(tg, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_FiniteSectionDense)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_OracleInertia(benchmark::State& st) {
  const auto& f = *filter_catalog("flag").front();
  const Spectrum s = canonical_spectrum(f.spec);
  for (auto _ : st) benchmark::DoNotOptimize(finite_section_check(f.spec, s, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_OracleInertia)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Catalog(benchmark::State& st) {
  for (auto _ : st)
    for (const auto& f : fixture_catalog()) benchmark::DoNotOptimize(run_fixture(f, 1e-9));
}
BENCHMARK(BM_Catalog)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
