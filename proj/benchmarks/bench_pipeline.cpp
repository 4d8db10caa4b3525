#include <benchmark/benchmark.h>

#include "acsv/critical.hpp"
#include "acsv/oracle.hpp"
#include "acsv/parse.hpp"
#include "acsv/spai.hpp"

using namespace acsv;

namespace {

const char* const kCases[] = {
    "2 - x*y^2 - 2*x*y - x + y",
    "1 - x - y - x*y^2",
    "-x^2*y - 10*x*y^2 - x^2 - 20*x*y - 9*x + 10*y + 20",
};

void BM_Algorithm1(benchmark::State& state) {
  auto ring = make_ring({"x", "y"});
  auto q = parse_polynomial(kCases[state.range(0)], ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(algorithm1({q, Direction({1, 1}), {}, false}));
  }
}
BENCHMARK(BM_Algorithm1)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AffineCriticalPoints(benchmark::State& state) {
  auto ring = make_ring({"x", "y"});
  auto q = parse_polynomial(kCases[state.range(0)], ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine_critical_points(q, Direction({1, 1})));
  }
}
BENCHMARK(BM_AffineCriticalPoints)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_DiagonalSeries(benchmark::State& state) {
  auto ring = make_ring({"x", "y"});
  SeriesRequest req{Polynomial(ring, Rational(1)), parse_polynomial("1 - x - y - x*y^2", ring),
                    Direction({1, 1}), static_cast<std::size_t>(state.range(0)),
                    kDefaultDegreeCap};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coefficients(req));
  }
}
BENCHMARK(BM_DiagonalSeries)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
