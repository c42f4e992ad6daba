#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "chebjac/recurrences.hpp"
#include "chebjac/transform.hpp"

namespace {

const chebjac::JacobiParameters kParams(0.125, 0.375);

std::vector<double> random_coefficients(int N) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(N) + 1);
  for (auto& x : c) x = u(rng);
  return c;
}

void run_transform(benchmark::State& state, chebjac::Direction dir) {
  const int N = static_cast<int>(state.range(0));
  const int M = static_cast<int>(state.range(1));
  const auto plan = chebjac::make_plan(dir, kParams, N, M);
  auto ws = plan.make_workspace();
  const auto c = random_coefficients(N);
  for (auto _ : state) {
    auto y = plan.execute(c, ws);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetComplexityN(N);
}

void BM_Forward(benchmark::State& state) { run_transform(state, chebjac::Direction::forward); }
void BM_Inverse(benchmark::State& state) { run_transform(state, chebjac::Direction::inverse); }

void BM_PlanForward(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto plan = chebjac::make_plan(chebjac::Direction::forward, kParams, N);
    benchmark::DoNotOptimize(&plan);
  }
}

// Forward plan plus one execution against a plan built once: shows how much
// of a one-shot transform is planning.
void BM_OneShotForward(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto c = random_coefficients(N);
  for (auto _ : state) {
    const auto plan = chebjac::make_plan(chebjac::Direction::forward, kParams, N);
    auto y = chebjac::forward(plan, c);
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_Clenshaw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const chebjac::RecurrenceTable table(kParams, n);
  const auto c = random_coefficients(n);
  const auto pt = chebjac::AnglePoint::from_angle(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(table.clenshaw(c, pt));
}

void transform_sizes(benchmark::internal::Benchmark* b) {
  for (int e = 10; e <= 16; e += 2) b->Args({1 << e, 7});
  b->Args({1 << 14, 13});
}

}  // namespace

BENCHMARK(BM_Forward)->Apply(transform_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inverse)->Apply(transform_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlanForward)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OneShotForward)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Clenshaw)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
