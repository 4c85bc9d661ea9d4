#include <benchmark/benchmark.h>

#include <random>

#include "relic/signal.hpp"

namespace {

relic::signal::Signal make_signal(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long long> num(-50, 50);
  relic::signal::Signal v(n);
  for (auto& x : v) x = relic::Rational(num(rng), 4);
  return v;
}

void BM_movavg_naive(benchmark::State& state) {
  const auto v = make_signal(static_cast<std::size_t>(state.range(0)));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(relic::signal::moving_average_naive(v, w));
}

void BM_movavg_stream(benchmark::State& state) {
  const auto v = make_signal(static_cast<std::size_t>(state.range(0)));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(relic::signal::moving_average_stream(v, w));
}

void BM_movavg_memo(benchmark::State& state) {
  const auto v = make_signal(static_cast<std::size_t>(state.range(0)));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(relic::signal::moving_average_memo(v, w));
}

// The relational run carries the whole engine, so it gets smaller sizes.
void BM_movavg_relational(benchmark::State& state) {
  const auto v = make_signal(static_cast<std::size_t>(state.range(0)));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(relic::signal::moving_average_relational(v, w));
}

}  // namespace

BENCHMARK(BM_movavg_naive)->Args({256, 8})->Args({1024, 32});
BENCHMARK(BM_movavg_stream)->Args({256, 8})->Args({1024, 32});
BENCHMARK(BM_movavg_memo)->Args({256, 8})->Args({1024, 32});
BENCHMARK(BM_movavg_relational)->Args({64, 8})->Args({256, 8});
