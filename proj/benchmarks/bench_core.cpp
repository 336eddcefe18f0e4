#include <benchmark/benchmark.h>

#include <random>

#include "quartic/degree.hpp"
#include "quartic/elliptic.hpp"
#include "quartic/lattice.hpp"
#include "quartic/polynomial.hpp"
#include "quartic/quartic.hpp"
#include "quartic/untwist.hpp"
#include "quartic/words.hpp"

using namespace quartic;

namespace {

QuarticIncidence mixed() {
  return QuarticIncidence({{"A", false}, {"B1", false}, {"B2", false}, {"C1", false}, {"C2", false}, {"C3", false}},
                          {{"L1", {"A"}, false}, {"L2", {"B1", "B2"}, false}, {"L3", {"C1", "C2", "C3"}, false}});
}

Word cluster_word(std::size_t length, std::uint64_t seed) {
  const std::vector<Generator> letters{PointGen{"B1"}, PointGen{"B2"}, LineGen{"L2"}};
  std::mt19937_64 rng(seed);
  Word w;
  while (w.size() < length) {
    const Generator g = letters[rng() % letters.size()];
    if (w.empty() || !(w.back() == g)) w.push_back(g);
  }
  return w;
}

void BM_ApplyWord(benchmark::State& state) {
  const auto c = mixed();
  const Word w = cluster_word(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(c, w, DegreeVector::identity(c)));
}
BENCHMARK(BM_ApplyWord)->Arg(4)->Arg(12)->Arg(48);

void BM_Untwist(benchmark::State& state) {
  const auto c = mixed();
  const auto v = apply_word(c, cluster_word(static_cast<std::size_t>(state.range(0)), 2), DegreeVector::identity(c));
  for (auto _ : state) benchmark::DoNotOptimize(untwist(c, v));
}
BENCHMARK(BM_Untwist)->Arg(4)->Arg(12)->Arg(48);

void BM_EqualClusterWords(benchmark::State& state) {
  const auto c = mixed();
  const Word w = cluster_word(12, 3);
  const Word shuffled = cluster_word(12, 4);
  for (auto _ : state) benchmark::DoNotOptimize(equal(c, w, shuffled));
}
BENCHMARK(BM_EqualClusterWords);

void BM_VerifyRelations(benchmark::State& state) {
  const auto c = mixed();
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(c, static_cast<std::size_t>(state.range(0)), 9));
}
BENCHMARK(BM_VerifyRelations)->Arg(100)->Arg(1000);

void BM_Definiteness(benchmark::State& state) {
  const auto m = intersection_matrix(dynkin_diagram("E8^(1)"));
  for (auto _ : state) benchmark::DoNotOptimize(definiteness(m));
}
BENCHMARK(BM_Definiteness);

void BM_CheckStar(benchmark::State& state) {
  const auto g = dynkin_diagram("E7^(1)");
  for (auto _ : state) benchmark::DoNotOptimize(check_star(g, {}));
}
BENCHMARK(BM_CheckStar);

void BM_EckardtNormalForm(benchmark::State& state) {
  const std::size_t n = 5;
  const auto x = HomogPoly::variable(n, 0), y = HomogPoly::variable(n, 1), z = HomogPoly::variable(n, 2),
             t = HomogPoly::variable(n, 3), w = HomogPoly::variable(n, 4);
  const HomogPoly f = w * w * (x * y + z * t) - (x.pow(3) * y + y.pow(4) + z.pow(4) + t.pow(4));
  const ProjPoint p{0, 0, 0, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(eckardt_normal_form(f, p));
}
BENCHMARK(BM_EckardtNormalForm);

}  // namespace
BENCHMARK_MAIN();
