#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "numlab/dioph.hpp"
#include "numlab/fourcolor.hpp"
#include "numlab/godel.hpp"
#include "numlab/machine.hpp"
#include "numlab/miu.hpp"
#include "numlab/numbers/cyclotomic.hpp"
#include "numlab/numbers/factor.hpp"
#include "numlab/numbers/galois.hpp"
#include "numlab/sets.hpp"
#include "numlab/topo/homology.hpp"
#include "numlab/topo/manifold.hpp"

namespace {

using namespace numlab;

std::string fixture(const char* name) {
  std::ifstream in(std::string(NUMLAB_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_MulProgram(benchmark::State& state) {
  const auto mul = machine::parse_program(fixture("mul.prog"));
  const std::vector<sets::Natural> in{static_cast<sets::Natural>(state.range(0)), 7};
  for (auto _ : state) benchmark::DoNotOptimize(machine::run(mul, in, 1000000).output);
}
BENCHMARK(BM_MulProgram)->Arg(4)->Arg(16)->Arg(64);

void BM_Unpair(benchmark::State& state) {
  sets::Natural n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sets::unpair(n++));
}
BENCHMARK(BM_Unpair);

void BM_PrimeEnumerator(benchmark::State& state) {
  for (auto _ : state) {
    auto e = sets::enumerator_from_predicate(sets::DecidablePredicate::native(sets::is_prime));
    benchmark::DoNotOptimize(e.take(static_cast<std::size_t>(state.range(0)), 1000000).first);
  }
}
BENCHMARK(BM_PrimeEnumerator)->Arg(100)->Arg(1000);

void BM_BoxSearchPrime(benchmark::State& state) {
  // a prime has no witness, so the whole (pruned) box is scanned
  const auto& fam = dioph::builtin_families().at("composite");
  const auto bound = static_cast<sets::Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::search_solution(fam, 199, dioph::BoxSearch{bound}).exhaustive);
}
BENCHMARK(BM_BoxSearchPrime)->Arg(100)->Arg(10000);

void BM_SquareEnumerator(benchmark::State& state) {
  for (auto _ : state) {
    auto e = dioph::diophantine_enumerator(dioph::builtin_families().at("square"));
    benchmark::DoNotOptimize(e.take(15, 1000000).first);
  }
}
BENCHMARK(BM_SquareEnumerator);

void BM_GaloisGroup(benchmark::State& state) {
  static const char* const polys[] = {"x^3 - 2", "x^4 + x^3 + x^2 + x + 1", "x^4 - 2", "x^4 - x - 1", "x^4 + 8*x + 12"};
  const auto p = numbers::parse_unipoly(polys[state.range(0)]);
  state.SetLabel(polys[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(numbers::galois_group(p).order);
}
BENCHMARK(BM_GaloisGroup)->DenseRange(0, 4);

void BM_FactorDegreeEight(benchmark::State& state) {
  const auto p = numbers::parse_unipoly("x^8 + 4");
  for (auto _ : state) benchmark::DoNotOptimize(numbers::factor_integer_poly(p).factors.size());
}
BENCHMARK(BM_FactorDegreeEight);

void BM_GaussSum(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numbers::quadratic_gauss_sum(p).modulus());
}
BENCHMARK(BM_GaussSum)->Arg(5)->Arg(29)->Arg(97);

void BM_Homology(benchmark::State& state) {
  const auto torus = topo::parse_complex(fixture("torus7.cx"));
  for (auto _ : state) benchmark::DoNotOptimize(topo::homology(torus)[1].rank);
}
BENCHMARK(BM_Homology);

void BM_ManifoldEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    auto e = topo::enumerate_complexes(5, topo::ComplexFilter::ClosedManifold);
    benchmark::DoNotOptimize(e.take(10, 1000000).first);
  }
}
BENCHMARK(BM_ManifoldEnumeration)->Unit(benchmark::kMillisecond);

void BM_PlanarEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reductions::enumerate_planar_graphs(n).size());
}
BENCHMARK(BM_PlanarEnumeration)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_MiuTheorems(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reductions::miu_theorems(8, 12).theorems.size());
}
BENCHMARK(BM_MiuTheorems);

void BM_GodelRoundTrip(benchmark::State& state) {
  const auto add = machine::parse_program(fixture("add.prog"));
  for (auto _ : state) benchmark::DoNotOptimize(reductions::decode_program(reductions::encode_program(add)).size());
}
BENCHMARK(BM_GodelRoundTrip);

}  // namespace

BENCHMARK_MAIN();
