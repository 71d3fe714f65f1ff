#include <benchmark/benchmark.h>

#include <random>

#include "wreathmono/group.hpp"
#include "wreathmono/orbitcount.hpp"
#include "wreathmono/realize.hpp"
#include "wreathmono/reducer.hpp"
#include "wreathmono/search.hpp"
#include "wreathmono/wreath.hpp"

using namespace wm;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

void BM_GroupOrder(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Perm> gens{random_perm(n, rng), random_perm(n, rng)};
  for (auto _ : state) {
    PermGroup g(n, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupOrder)->Arg(16)->Arg(49)->Arg(81)->Unit(benchmark::kMillisecond);

void BM_ReducedForm(benchmark::State& state) {
  auto t = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<Perm> base;
  for (std::size_t i = 0; i < t; ++i) base.push_back(random_perm(9, rng));
  WreathElement x(base, random_perm(t, rng));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_form(x));
}
BENCHMARK(BM_ReducedForm)->Arg(2)->Arg(4)->Arg(8);

void BM_SearchDegree6(benchmark::State& state) {
  SearchQuery q;
  q.degree = 6;
  q.classes = {CycleType::parse("[6]"), CycleType::parse("[2^3]"), CycleType::parse("[3,3]")};
  q.dedupe = true;
  for (auto _ : state) benchmark::DoNotOptimize(find_tuples(q).tuples.size());
}
BENCHMARK(BM_SearchDegree6)->Unit(benchmark::kMillisecond);

void BM_RpiBruteforce(benchmark::State& state) {
  auto ell = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  WreathElement x({random_perm(ell, rng), random_perm(ell, rng)}, swap_top());
  for (auto _ : state) benchmark::DoNotOptimize(rpi_bruteforce(x).rpi);
}
BENCHMARK(BM_RpiBruteforce)->Arg(10)->Arg(30);

void BM_VerifyRow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_row("I1.1", 11, 2u).pass());
}
BENCHMARK(BM_VerifyRow)->Unit(benchmark::kMillisecond);

void BM_ReducedMultiset(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Perm one(7);
  WreathElement x1({random_perm(7, rng), one, one}, Perm::from_cycles(3, {{0, 1, 2}}));
  WreathElement x2({random_perm(7, rng), random_perm(7, rng), random_perm(7, rng)}, Perm::transposition(3, 0, 1));
  std::vector<WreathElement> t{x1, x2, (x1 * x2).inverse()};
  for (auto _ : state) benchmark::DoNotOptimize(reduced_multiset(t).elements.size());
}
BENCHMARK(BM_ReducedMultiset);

}  // namespace
BENCHMARK_MAIN();
