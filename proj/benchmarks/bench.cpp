#include <benchmark/benchmark.h>

#include "permeq/permeq.hpp"

using namespace permeq;

static void BM_Oracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Perm alpha = Perm::standard_cycle(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_solutions(alpha, 2, 8, 1));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Oracle)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_DRange(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> counts(n, 0);
  // many short cycles plus a few long ones
  std::size_t left = n;
  for (std::size_t len = 1; left > 0; len = len % 12 + 1) {
    if (len > left)
      len = left;
    ++counts[len - 1];
    left -= len;
  }
  const CycleType t(counts);
  for (auto _ : state)
    benchmark::DoNotOptimize(d_range(t, 1));
}
BENCHMARK(BM_DRange)->RangeMultiplier(4)->Range(64, 4096);

static void BM_QValue(benchmark::State& state) {
  const auto v = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(q_of(2, v));
}
BENCHMARK(BM_QValue)->Arg(11)->Arg(61)->Arg(127)->Arg(1009);

static void BM_Centralizer(benchmark::State& state) {
  const auto copies = static_cast<std::size_t>(state.range(0));
  std::vector<Point> image;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto base = static_cast<Point>(3 * c);
    image.insert(image.end(), {base + 2, base + 3, base + 1});
  }
  const Perm alpha = Perm::from_image(image);
  for (auto _ : state)
    benchmark::DoNotOptimize(centralizer_elements(alpha));
}
BENCHMARK(BM_Centralizer)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Construct(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_cyclic_solution(60, 15, 2));
}
BENCHMARK(BM_Construct);
BENCHMARK_MAIN();
