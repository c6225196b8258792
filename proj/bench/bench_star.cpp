// Serial reference vs OpenMP kernel for the coprime commutator sweep.
#include <numeric>

#include <benchmark/benchmark.h>

#include "cck/catalog.hpp"
#include "cck/star_kernels.hpp"

namespace {

const char* const kGroups[] = {"psl2(7)", "symmetric(5)", "symmetric(6)",
                               "direct_product(symmetric(4),alternating(5))"};

std::vector<cck::ElementId> all_ids(const cck::GroupTable& g) {
  std::vector<cck::ElementId> ids(g.order());
  std::iota(ids.begin(), ids.end(), cck::ElementId{0});
  return ids;
}

template <auto Kernel>
void run(benchmark::State& state) {
  const auto g = cck::build_group(cck::builtin(kGroups[state.range(0)]));
  const auto ids = all_ids(g);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, ids, ids));
  state.SetLabel(g.name());
  state.counters["pairs"] = static_cast<double>(ids.size() * ids.size());
}

void serial(benchmark::State& s) { run<cck::kernels::coprime_commutators_serial>(s); }
void omp(benchmark::State& s) { run<cck::kernels::coprime_commutators_omp>(s); }

}  // namespace

BENCHMARK(serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(omp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
