#include <benchmark/benchmark.h>

#include "gha/catalog.hpp"
#include "gha/corpus.hpp"
#include "gha/hom.hpp"
#include "gha/kernels.hpp"

namespace {

const gha::GraphCatalog& catalog() {
  static const auto c = gha::cached_catalog(2, gha::CatalogBounds::defaults(2));
  return *c;
}

void BM_FillColumnsSerial(benchmark::State& state) {
  const gha::HomKernel kernel(gha::corpus::asymmetric6());
  for (auto _ : state) benchmark::DoNotOptimize(gha::serial::fill_columns(kernel, catalog().graphs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(catalog().size()));
}

void BM_FillColumnsParallel(benchmark::State& state) {
  gha::set_jobs(static_cast<int>(state.range(0)));
  const gha::HomKernel kernel(gha::corpus::asymmetric6());
  for (auto _ : state) benchmark::DoNotOptimize(gha::parallel::fill_columns(kernel, catalog().graphs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(catalog().size()));
}

void BM_GluingSerial(benchmark::State& state) {
  const gha::HomKernel kernel(gha::corpus::half_edge_p3());
  const auto small = gha::cached_catalog(1, {3, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(gha::serial::gluing_values(kernel, small->graphs));
}

void BM_GluingParallel(benchmark::State& state) {
  gha::set_jobs(static_cast<int>(state.range(0)));
  const gha::HomKernel kernel(gha::corpus::half_edge_p3());
  const auto small = gha::cached_catalog(1, {3, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(gha::parallel::gluing_values(kernel, small->graphs));
}

// Integer kernel against the plain rational brute force on one pattern.
void BM_KernelPartial(benchmark::State& state) {
  const auto g = gha::corpus::half_edge_p3();
  const gha::HomKernel kernel(g);
  const gha::KLabeledGraph f(1, 5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(kernel.partial(f, gha::MapAssignment{{1}}));
}

void BM_ReferencePartial(benchmark::State& state) {
  const auto g = gha::corpus::half_edge_p3();
  const gha::KLabeledGraph f(1, 5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(gha::reference::hom_partial(f, g, gha::MapAssignment{{1}}));
}

}  // namespace

BENCHMARK(BM_FillColumnsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillColumnsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluingSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluingParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelPartial);
BENCHMARK(BM_ReferencePartial);

BENCHMARK_MAIN();
