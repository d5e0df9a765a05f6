#include <benchmark/benchmark.h>

#include <vector>

#include "bisplit/oracle/ideal.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/splitting.hpp"

namespace {

using namespace bisplit;

// Staircase (n, n-1, ..., 1): n+1 generators.
AcmConfig staircase(int n) {
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) parts.push_back(i);
  return acm_from_partition(Partition(parts));
}

void BM_MinGens(benchmark::State& state) {
  const AcmConfig c = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_gens(c));
}
BENCHMARK(BM_MinGens)->RangeMultiplier(4)->Range(4, 256);

void BM_ClosedFormBetti(benchmark::State& state) {
  const Arrangement w = attach_lines(staircase(static_cast<int>(state.range(0))), 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(w));
}
BENCHMARK(BM_ClosedFormBetti)->RangeMultiplier(4)->Range(4, 256);

void BM_Intersect(benchmark::State& state) {
  const Arrangement w = attach_lines(staircase(static_cast<int>(state.range(0))), 0, 0);
  const GeneratorSet g = w.generators();
  std::vector<std::size_t> odd;
  for (std::size_t i = 1; i <= g.size(); i += 2) odd.push_back(i);
  const SplitPartition s = SplitPartition::from_positions(g, odd);
  const Arrangement j = recognize(s.side_a());
  const Arrangement k = recognize(s.side_b());
  for (auto _ : state) benchmark::DoNotOptimize(intersect(j, k));
}
BENCHMARK(BM_Intersect)->RangeMultiplier(4)->Range(4, 256);

void BM_EnumerateBipartitions(benchmark::State& state) {
  const GeneratorSet g = min_gens(staircase(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    std::size_t total = 0;
    for_each_bipartition(g, [&](const SplitPartition& s) { total += cut_number(s); });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateBipartitions)->DenseRange(4, 12, 4);

void BM_OracleBeta0(benchmark::State& state) {
  const oracle::PrimeField field;
  const AcmConfig c = staircase(static_cast<int>(state.range(0)));
  const GridPointSet x = c.to_grid();
  const oracle::Box box = oracle::default_box({static_cast<int>(c.rows()), static_cast<int>(c.cols())});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::beta0_box(oracle::IdealPieces::vanishing(field, x), box));
}
BENCHMARK(BM_OracleBeta0)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_OracleIntersection(benchmark::State& state) {
  const oracle::PrimeField field;
  const Arrangement w = attach_lines(staircase(static_cast<int>(state.range(0))), 0, 0);
  const SplitPartition s = SplitPartition::from_positions(w.generators(), {1, 3});
  const oracle::Box box = oracle::default_box(w.ambient());
  for (auto _ : state) {
    const auto cap = oracle::IdealPieces::intersection(oracle::generated_ideal(field, s.side_a(), w),
                                                       oracle::generated_ideal(field, s.side_b(), w));
    benchmark::DoNotOptimize(oracle::beta0_box(cap, box));
  }
}
BENCHMARK(BM_OracleIntersection)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
