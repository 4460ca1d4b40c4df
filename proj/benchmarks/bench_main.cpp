#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wtdem/demazure.hpp"
#include "wtdem/qbg.hpp"

using namespace wtdem;

namespace {

std::vector<WTElement> sample_elements(std::size_t n, std::uint64_t seed,
                                       std::int64_t min_level = 0) {
  std::mt19937_64 gen(seed);
  auto rnd = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  };
  std::vector<WTElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Coweight mu{rnd(-6, 6), rnd(-6, 6), rnd(min_level, 5)};
    if (mu.l == 0) mu.k = 0;
    out.push_back({WeylElt{rnd(0, 1) == 1, rnd(-3, 3)}, mu});
  }
  return out;
}

std::vector<WeylElt> sample_weyl(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto rnd = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  };
  std::vector<WeylElt> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({rnd(0, 1) == 1, rnd(-4, 4)});
  return out;
}

void BM_qbg_distance_closed(benchmark::State& state) {
  auto ws = sample_weyl(256, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& u = ws[i % ws.size()];
    const auto& v = ws[(i + 1) % ws.size()];
    benchmark::DoNotOptimize(distance(u, v));
    benchmark::DoNotOptimize(weight(u, v));
    ++i;
  }
}
BENCHMARK(BM_qbg_distance_closed);

void BM_qbg_bfs_oracle(benchmark::State& state) {
  auto ws = sample_weyl(64, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& u = ws[i % ws.size()];
    const auto& v = ws[(i + 1) % ws.size()];
    benchmark::DoNotOptimize(bfs_distance(u, v));
    ++i;
  }
}
BENCHMARK(BM_qbg_bfs_oracle);

void BM_lp_set(benchmark::State& state) {
  auto xs = sample_elements(256, 11);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_set(xs[i % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_lp_set);

void BM_wt_length(benchmark::State& state) {
  auto xs = sample_elements(256, 13);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wt_length(xs[i % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_wt_length);

void BM_wt_length_via_inversions(benchmark::State& state) {
  auto xs = sample_elements(256, 13);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wt_length_via_inversions(xs[i % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_wt_length_via_inversions);

void BM_dem_product(benchmark::State& state) {
  auto xs = sample_elements(256, 17, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = xs[i % xs.size()];
    const auto& y = xs[(i + 1) % xs.size()];
    benchmark::DoNotOptimize(dem_product(x, y));
    ++i;
  }
}
BENCHMARK(BM_dem_product);

}  // namespace

BENCHMARK_MAIN();
