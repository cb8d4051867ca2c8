#include <benchmark/benchmark.h>

#include <random>

#include "lamplighter/ball.hpp"
#include "lamplighter/constructions.hpp"
#include "lamplighter/distortion.hpp"
#include "lamplighter/metric.hpp"
#include "lamplighter/path_queries.hpp"
#include "lamplighter/separation.hpp"

namespace ll = lamplighter;

namespace {

std::vector<ll::Configuration> sample_configs(std::size_t count) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pos(-20, 20);
  std::bernoulli_distribution lit(0.25);
  std::vector<ll::Configuration> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<ll::Position> lamps;
    for (ll::Position p = -20; p <= 20; ++p) {
      if (lit(rng)) lamps.push_back(p);
    }
    out.emplace_back(std::move(lamps), pos(rng));
  }
  return out;
}

void BM_WordDistance(benchmark::State& state) {
  const auto configs = sample_configs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ll::word_distance(configs[i % 1024], configs[(i * 7 + 3) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_WordDistance);

void BM_WordDistancePacked(benchmark::State& state) {
  std::vector<ll::PackedConfig> packed;
  for (const auto& c : sample_configs(1024)) packed.push_back(*ll::PackedConfig::pack(c));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ll::word_distance(packed[i % 1024], packed[(i * 7 + 3) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_WordDistancePacked);

void BM_BfsDistance(benchmark::State& state) {
  const ll::Configuration target({0, 1, 2, 3}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ll::bfs_distance({}, target, 8));
}
BENCHMARK(BM_BfsDistance);

void BM_BallBuild(benchmark::State& state) {
  const int radius = static_cast<int>(state.range(0));
  std::size_t members = 0;
  for (auto _ : state) {
    const ll::Ball ball = ll::Ball::build({}, radius);
    members = ball.size();
  }
  state.counters["members"] = static_cast<double>(members);
  state.SetItemsProcessed(static_cast<std::int64_t>(members) * state.iterations());
}
BENCHMARK(BM_BallBuild)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_StageEnumeration(benchmark::State& state) {
  const auto last = static_cast<std::uint64_t>(state.range(0));
  std::size_t visited = 0;
  for (auto _ : state) {
    visited = 0;
    ll::for_each_stage_vertex(0, last, [&](const ll::PackedConfig&) { ++visited; });
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(visited) * state.iterations());
}
BENCHMARK(BM_StageEnumeration)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

void BM_HalfLineWalk(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ll::half_quasi_line(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_HalfLineWalk)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const auto mode = state.range(1) == 0 ? ll::ProfileMode::Neighborhood : ll::ProfileMode::Pairwise;
  const auto limit = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ll::distortion_profile(ll::PathSpec::half_line(), limit, 4, mode));
  }
}
BENCHMARK(BM_Profile)
    ->ArgNames({"index_limit", "pairwise"})
    ->Args({2000, 0})
    ->Args({4000, 0})
    ->Args({2000, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Separation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ll::ProbeSet p = ll::probes(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ll::separation_report(ll::PathSpec::half_line(), 0, 5 * n + 2, p.a_n, p.b_n).separated);
  }
}
BENCHMARK(BM_Separation)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
