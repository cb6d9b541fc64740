#include <benchmark/benchmark.h>

#include <random>

#include "psts/analysis.hpp"
#include "psts/constructions.hpp"
#include "psts/isomorphism.hpp"
#include "psts/reference.hpp"
#include "psts/transforms.hpp"
#include "psts/verify.hpp"

namespace {

void enumerate_grassmannian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = psts::grassmannian(n);
  for (auto _ : state) benchmark::DoNotOptimize(psts::enumerate_free_complete(g, n - 1));
}
BENCHMARK(enumerate_grassmannian)->DenseRange(5, 9);

void enumerate_reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = psts::grassmannian(n);
  for (auto _ : state) benchmark::DoNotOptimize(psts::reference::free_complete_subsets(g, n - 1));
}
BENCHMARK(enumerate_reference)->DenseRange(5, 7);

void canonical_grassmannian(benchmark::State& state) {
  const auto g = psts::grassmannian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psts::canonical_form(g));
}
BENCHMARK(canonical_grassmannian)->DenseRange(5, 9);

void canonical_perspective(benchmark::State& state) {
  std::mt19937_64 rng(psts::kDefaultSeed);
  const auto c = psts::perspective_system(psts::random_perspective_data(6, 3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(psts::canonical_form(c));
}
BENCHMARK(canonical_perspective);

void extend_step(benchmark::State& state) {
  std::mt19937_64 rng(psts::kDefaultSeed);
  const auto c = psts::perspective_system(psts::random_perspective_data(6, 2, rng));
  const auto pair = psts::enumerate_free_complete(c, 6);
  for (auto _ : state) benchmark::DoNotOptimize(psts::extend_one_more(c, pair));
}
BENCHMARK(extend_step);

void veblen_census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psts::classify_veblen_labellings());
}
BENCHMARK(veblen_census)->Unit(benchmark::kMillisecond);

void battery(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psts::run_property_battery(n_max));
}
BENCHMARK(battery)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
