#include <benchmark/benchmark.h>

#include "rootcensus/arrangement.hpp"
#include "rootcensus/counting.hpp"
#include "rootcensus/invariants.hpp"
#include "rootcensus/poset.hpp"
#include "rootcensus/weyl.hpp"

using namespace rootcensus;

namespace {

void BM_GeneratePositiveRoots(benchmark::State& state, const char* name) {
  const CartanMatrix cm = cartan_matrix(CartanType::parse(name));
  for (auto _ : state) {
    RootSystem rs = generate_positive_roots(cm);
    benchmark::DoNotOptimize(rs.positive_roots.size());
  }
}
BENCHMARK_CAPTURE(BM_GeneratePositiveRoots, B8, "B8");
BENCHMARK_CAPTURE(BM_GeneratePositiveRoots, E8, "E8");

void BM_FullCensus(benchmark::State& state, const char* name) {
  const RootSystem rs = build_root_system(CartanType::parse(name));
  for (auto _ : state) {
    CensusReport rep = full_census(rs);
    benchmark::DoNotOptimize(rep.agree);
  }
}
BENCHMARK_CAPTURE(BM_FullCensus, F4, "F4");
BENCHMARK_CAPTURE(BM_FullCensus, E8, "E8");

void BM_EnumerateIdeals(benchmark::State& state, const char* name) {
  const RootSystem rs = build_root_system(CartanType::parse(name));
  const RootPoset poset = build_root_poset(rs);
  for (auto _ : state) {
    std::uint64_t n = count_ideals(poset);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK_CAPTURE(BM_EnumerateIdeals, B4, "B4");
BENCHMARK_CAPTURE(BM_EnumerateIdeals, D5, "D5");

void BM_WeylClosure(benchmark::State& state, const char* name) {
  const RootSystem rs = build_root_system(CartanType::parse(name));
  for (auto _ : state) {
    auto group = generate_weyl_group(rs);
    benchmark::DoNotOptimize(group.size());
  }
}
BENCHMARK_CAPTURE(BM_WeylClosure, B3, "B3");
BENCHMARK_CAPTURE(BM_WeylClosure, F4, "F4");

void BM_RestrictedCharpoly(benchmark::State& state, const char* name) {
  const RootSystem rs = build_root_system(CartanType::parse(name));
  for (auto _ : state) {
    IntPolynomial chi = characteristic_polynomial(restricted_arrangement(rs, 0));
    benchmark::DoNotOptimize(chi.degree());
  }
}
BENCHMARK_CAPTURE(BM_RestrictedCharpoly, B4, "B4");
BENCHMARK_CAPTURE(BM_RestrictedCharpoly, F4, "F4");

} // namespace

BENCHMARK_MAIN();
