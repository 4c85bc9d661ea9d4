#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "relic/ccl.hpp"
#include "relic/kanren.hpp"
#include "relic/loops.hpp"

namespace {

using namespace relic;
using mk::Term;

// Unify two n-element lists, one of fresh variables and one of numbers.
void BM_unify_lists(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Term> numbers;
  for (int i = 0; i < n; ++i) numbers.push_back(Term(i));
  const Term ground = Term::list(numbers);

  for (auto _ : state) {
    mk::Subst s0;
    auto [vars, s1] = s0.make_fresh(n);
    auto unified = mk::unify(Term::list(vars), ground, s1);
    benchmark::DoNotOptimize(unified);
  }
}

// Enumerate every answer of a disjunction of n bindings.
void BM_run_disj(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto answers = mk::run_all([n](Term q) {
      std::vector<mk::Goal> arms;
      for (int i = 0; i < n; ++i) arms.push_back(mk::eq(q, Term(i)));
      return mk::disj_all(std::move(arms));
    });
    benchmark::DoNotOptimize(answers);
  }
}

// A relational loop binding one variable per cell of a k x k grid.
void BM_builde_nest(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto answers = mk::run_all([k](Term q) {
      return mk::fresh(k * k, [k, q](const std::vector<Term>& xs) {
        return mk::conj(mk::builde_nest({k, k},
                                        [k, xs](const std::vector<int>& idx) {
                                          const int flat = idx[0] * k + idx[1];
                                          return mk::eq(xs[static_cast<std::size_t>(flat)],
                                                        Term(flat));
                                        }),
                        mk::eq(q, Term::list(xs)));
      });
    });
    benchmark::DoNotOptimize(answers);
  }
}

// Whole-pipeline workload: relational connected-component labeling.
void BM_ccl_relational(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  ccl::BinaryImage im(side, side);
  std::bernoulli_distribution fg(0.5);
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) im.set(x, y, fg(rng));

  for (auto _ : state)
    benchmark::DoNotOptimize(ccl::label_components_relational(im, ccl::Connectivity::four));
}

void BM_ccl_flood_fill(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  ccl::BinaryImage im(side, side);
  std::bernoulli_distribution fg(0.5);
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) im.set(x, y, fg(rng));

  for (auto _ : state)
    benchmark::DoNotOptimize(ccl::flood_fill_oracle(im, ccl::Connectivity::four));
}

}  // namespace

BENCHMARK(BM_unify_lists)->Arg(64)->Arg(512);
BENCHMARK(BM_run_disj)->Arg(64)->Arg(512);
BENCHMARK(BM_builde_nest)->Arg(4)->Arg(8);
BENCHMARK(BM_ccl_relational)->Arg(8)->Arg(16);
BENCHMARK(BM_ccl_flood_fill)->Arg(8)->Arg(16);
