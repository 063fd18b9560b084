// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "etacrit/kernels.hpp"
#include "etacrit/mobius.hpp"

namespace {

using namespace etacrit;

const MobiusTable& table() {
  static const MobiusTable mu = mobius_sieve(1000);
  return mu;
}

std::vector<std::int64_t> grid(std::size_t count) {
  std::vector<std::int64_t> points(count);
  std::iota(points.begin(), points.end(), std::int64_t{1000});
  return points;
}

void BM_FValuesSerial(benchmark::State& state) {
  const auto points = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<std::int64_t> out(points.size());
  for (auto _ : state) {
    kernels::f_values_serial(30, table(), points, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FValuesOmp(benchmark::State& state) {
  const auto points = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<std::int64_t> out(points.size());
  for (auto _ : state) {
    kernels::f_values(30, table(), points, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AlternatingSumSerial(benchmark::State& state) {
  const std::complex<double> s(0.6, 14.134725);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::alternating_power_sum_serial(s, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AlternatingSumOmp(benchmark::State& state) {
  const std::complex<double> s(0.6, 14.134725);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::alternating_power_sum(s, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<Rational> harmonic_terms(std::size_t count) {
  std::vector<Rational> terms;
  terms.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) terms.emplace_back(1, static_cast<unsigned long>(k));
  return terms;
}

void BM_ExactSumSerial(benchmark::State& state) {
  const auto terms = harmonic_terms(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exact_sum_serial(terms));
}

void BM_ExactSumOmp(benchmark::State& state) {
  const auto terms = harmonic_terms(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exact_sum(terms));
}

std::vector<kernels::TailCell> tail_cells(std::size_t count) {
  std::vector<kernels::TailCell> cells(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double lo = 1000.0 + static_cast<double>(i);
    cells[i] = {lo / 5040.0, (lo + 1.0) / 5040.0, std::log1p(1.0 / lo), 1.0 / 5040.0};
  }
  return cells;
}

void BM_DigammaTailSerial(benchmark::State& state) {
  const auto cells = tail_cells(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::digamma_tail_sum_serial(cells));
}

void BM_DigammaTailOmp(benchmark::State& state) {
  const auto cells = tail_cells(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::digamma_tail_sum(cells));
}

}  // namespace

BENCHMARK(BM_FValuesSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_FValuesOmp)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_AlternatingSumSerial)->Arg(1 << 16)->Arg(500000);
BENCHMARK(BM_AlternatingSumOmp)->Arg(1 << 16)->Arg(500000);
BENCHMARK(BM_ExactSumSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ExactSumOmp)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_DigammaTailSerial)->Arg(1 << 16);
BENCHMARK(BM_DigammaTailOmp)->Arg(1 << 16);

BENCHMARK_MAIN();
