#include <benchmark/benchmark.h>

#include "ctk/analysis.hpp"
#include "ctk/catalog.hpp"

#include <random>
#include <vector>

using namespace ctk;

namespace {

std::vector<Point> random_points(std::size_t n) {
  std::mt19937_64 rng(0xbe9c4);
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long a = static_cast<long>(rng() % 41) - 20;
    const long b = static_cast<long>(rng() % 41) - 20;
    const long d = static_cast<long>(rng() % 7) + 1;
    points.push_back({Scalar(a, d), Scalar(b, d)});
  }
  return points;
}

}  // namespace

static void BM_Classify(benchmark::State& state) {
  const auto points = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const CausalClass c = classify(points[i % 1024], points[(i + 1) % 1024]);
    benchmark::DoNotOptimize(c);
    ++i;
  }
}
BENCHMARK(BM_Classify);

static void BM_Relates(benchmark::State& state) {
  const auto points = random_points(1024);
  const RelationId r = static_cast<RelationId>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        relates(r, points[i % 1024], points[(i + 1) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_Relates)->DenseRange(1, 10);

static void BM_CoreMembership(benchmark::State& state) {
  const Point origin{Scalar(0), Scalar(0)};
  const Region core =
      interval_core(topology(static_cast<int>(state.range(0))), origin);
  const auto points = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains(core, points[i % 1024]));
    ++i;
  }
}
BENCHMARK(BM_CoreMembership)->Arg(2)->Arg(11)->Arg(27);

static void BM_SampleGrid41(benchmark::State& state) {
  const Point origin{Scalar(0), Scalar(0)};
  const Region core = interval_core(topology(2), origin);
  const Point lo{Scalar(-5), Scalar(-5)};
  const Point hi{Scalar(5), Scalar(5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_grid(core, lo, hi, 41, 41));
  }
}
BENCHMARK(BM_SampleGrid41);

static void BM_NullSequence(benchmark::State& state) {
  const TopologyId& tid = topology(27);
  for (auto _ : state) {
    benchmark::DoNotOptimize(null_sequence_experiment(tid, 100));
  }
}
BENCHMARK(BM_NullSequence);

BENCHMARK_MAIN();
