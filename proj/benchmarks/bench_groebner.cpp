#include <benchmark/benchmark.h>

#include "acsv/groebner.hpp"
#include "acsv/parse.hpp"

using namespace acsv;

namespace {

void BM_GroebnerCyclic3(benchmark::State& state) {
  auto ring = make_ring({"a", "b", "c"});
  auto gens = parse_polynomial_list("a + b + c; a*b + b*c + c*a; a*b*c - 1", ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(gens, TermOrder::grevlex(3)));
  }
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_GroebnerLexKatsura3(benchmark::State& state) {
  auto ring = make_ring({"x", "y", "z"});
  auto gens = parse_polynomial_list(
      "x + 2*y + 2*z - 1; x^2 + 2*y^2 + 2*z^2 - x; 2*x*y + 2*y*z - y", ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(gens, TermOrder::lex(3)));
  }
}
BENCHMARK(BM_GroebnerLexKatsura3);

void BM_SaturateVariable(benchmark::State& state) {
  auto ring = make_ring({"z0", "x", "y"});
  Ideal ideal(ring, parse_polynomial_list("x^2*y - z0^3; x*y^2 - z0*x*y", ring));
  std::vector<std::size_t> graded{0, 1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate_variable(ideal, 0, graded));
  }
}
BENCHMARK(BM_SaturateVariable);

void BM_SaturateRabinowitsch(benchmark::State& state) {
  auto ring = make_ring({"z0", "x", "y"});
  Ideal ideal(ring, parse_polynomial_list("x^2*y - z0^3; x*y^2 - z0*x*y", ring));
  auto z0 = Polynomial::variable(ring, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate(ideal, z0));
  }
}
BENCHMARK(BM_SaturateRabinowitsch);

}  // namespace
