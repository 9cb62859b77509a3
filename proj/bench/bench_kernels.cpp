#include "w22/lie.hpp"
#include "w22/pbw.hpp"
#include "w22/verma.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace w22;

namespace {

const HWParams<Rational> kPoint{Rational(1, 2), 3, Rational(2, 3), -8};

void BM_GramParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(gram_matrix(static_cast<int>(st.range(0)), kPoint));
}

void BM_GramReference(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(gram_matrix_reference(static_cast<int>(st.range(0)), kPoint));
}

void BM_GramSymbolic(benchmark::State& st) {
  const auto sym = HWParams<Polynomial>::symbolic();
  for (auto _ : st)
    benchmark::DoNotOptimize(gram_matrix(static_cast<int>(st.range(0)), sym));
}

void BM_JacobiParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(jacobi_report(st.range(0)));
}

void BM_JacobiSerial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(jacobi_report_serial(st.range(0)));
}

void BM_NormalOrder(benchmark::State& st) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> idx(-4, 4), kind(0, 1);
  std::vector<Word> words(64);
  for (auto& w : words)
    for (int k = 0; k < st.range(0); ++k)
      w.push_back(kind(rng) ? Generator::L(idx(rng)) : Generator::I(idx(rng)));
  for (auto _ : st)
    for (const auto& w : words)
      benchmark::DoNotOptimize(normal_order(w));
}

} // namespace

BENCHMARK(BM_GramParallel)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramReference)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSymbolic)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalOrder)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
