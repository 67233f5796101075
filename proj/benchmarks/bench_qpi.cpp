#include <benchmark/benchmark.h>

#include "qpi/arithfns.hpp"
#include "qpi/catalog.hpp"
#include "qpi/hyperphi.hpp"
#include "qpi/qproducts.hpp"
#include "qpi/series.hpp"
#include "qpi/wz.hpp"

namespace {

qpi::LaurentSeries dense_series(std::int64_t order) {
  std::vector<qpi::BigRational> coeffs(static_cast<std::size_t>(order));
  for (std::int64_t i = 0; i < order; ++i)
    coeffs[static_cast<std::size_t>(i)] = qpi::rat(i % 7 - 3, i % 3 + 1);
  if (coeffs[0] == 0) coeffs[0] = 1;
  return qpi::LaurentSeries::window(1, 0, order, std::move(coeffs));
}

void BM_SeriesMul(benchmark::State& state) {
  const auto a = dense_series(state.range(0));
  const auto b = dense_series(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qpi::ts_mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(100)->Arg(400);

void BM_SeriesInv(benchmark::State& state) {
  const auto a = dense_series(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qpi::ts_inv(a, state.range(0)));
}
BENCHMARK(BM_SeriesInv)->Arg(100)->Arg(400);

void BM_PochInfinite(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qpi::poch_infinite(qpi::q_pow(1), 2, state.range(0)));
}
BENCHMARK(BM_PochInfinite)->Arg(300)->Arg(1000);

void BM_VerifyPi2(benchmark::State& state) {
  const qpi::Catalog cat = qpi::Catalog::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(cat.verify("pi2", state.range(0)));
}
BENCHMARK(BM_VerifyPi2)->Arg(200)->Arg(500);

void BM_TelescopeQ2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qpi::q2_from_telescoping(state.range(0)));
}
BENCHMARK(BM_TelescopeQ2)->Arg(100);

void BM_T2Formula(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (std::int64_t n = 0; n < state.range(0); ++n) acc += qpi::t2_formula(n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_T2Formula)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
