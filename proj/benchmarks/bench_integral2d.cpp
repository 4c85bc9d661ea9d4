#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "relic/integral2d.hpp"

namespace {

using relic::img::Image;
using relic::img::Rect;

Image make_image(int side) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(side));
  std::uniform_int_distribution<long long> px(0, 255);
  Image im(side, side);
  for (auto& p : im.pixels) p = px(rng);
  return im;
}

// Ten 8x8 queries near the origin: the lazy table only fills the staircase
// those queries depend on, the eager one always pays for the whole plane.
std::vector<Rect> sparse_rects() {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> offset(0, 24);
  std::vector<Rect> rects;
  for (int i = 0; i < 10; ++i) rects.push_back({offset(rng), offset(rng), 8, 8});
  return rects;
}

void BM_sparse_eager(benchmark::State& state) {
  const Image im = make_image(static_cast<int>(state.range(0)));
  const auto rects = sparse_rects();
  for (auto _ : state) {
    relic::img::SummedAreaTable table(im);
    long long sum = 0;
    for (const auto& r : rects) sum += table.box_sum(r);
    benchmark::DoNotOptimize(sum);
  }
}

void BM_sparse_lazy(benchmark::State& state) {
  const Image im = make_image(static_cast<int>(state.range(0)));
  const auto rects = sparse_rects();
  for (auto _ : state) {
    relic::img::LazySummedAreaTable table(im);
    long long sum = 0;
    for (const auto& r : rects) sum += table.box_sum(r);
    benchmark::DoNotOptimize(sum);
  }
}

void BM_fullscan_eager(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Image im = make_image(side);
  for (auto _ : state) {
    relic::img::SummedAreaTable table(im);
    long long sum = 0;
    for (int y = 1; y <= side; ++y)
      for (int x = 1; x <= side; ++x) sum += table.entry(x, y);
    benchmark::DoNotOptimize(sum);
  }
}

void BM_fullscan_lazy(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Image im = make_image(side);
  for (auto _ : state) {
    relic::img::LazySummedAreaTable table(im);
    long long sum = 0;
    for (int y = 1; y <= side; ++y)
      for (int x = 1; x <= side; ++x) sum += table.entry(x, y);
    benchmark::DoNotOptimize(sum);
  }
}

}  // namespace

BENCHMARK(BM_sparse_eager)->Arg(128)->Arg(256);
BENCHMARK(BM_sparse_lazy)->Arg(128)->Arg(256);
BENCHMARK(BM_fullscan_eager)->Arg(128)->Arg(256);
BENCHMARK(BM_fullscan_lazy)->Arg(128)->Arg(256);
