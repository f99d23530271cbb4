#include <benchmark/benchmark.h>

#include "coxeter/conjugacy.hpp"
#include "coxeter/export.hpp"
#include "coxeter/scene.hpp"

using namespace coxeter;

static void BM_ConjugacyClassA2(benchmark::State& state) {
  const auto& g = AffineWeylGroup::of(CoxeterType::A2);
  auto x = g.parse_element("0120102");
  const Int bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_class(g, x, bound));
}
BENCHMARK(BM_ConjugacyClassA2)->Arg(2)->Arg(5)->Arg(10)->Arg(15);

static void BM_ConjugacyClassB3(benchmark::State& state) {
  const auto& g = AffineWeylGroup::of(CoxeterType::B3);
  auto x = g.parse_element("t_(1,0,1)*s_3");
  const Int bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_class(g, x, bound));
}
BENCHMARK(BM_ConjugacyClassB3)->Arg(1)->Arg(2)->Arg(4);

static void BM_CoconjugationG2(benchmark::State& state) {
  const auto& g = AffineWeylGroup::of(CoxeterType::G2);
  auto x = g.parse_element("t_(1,0)*s_1");
  auto y = g.conjugate(g.parse_element("t_(0,1)*s_2"), x);
  for (auto _ : state) benchmark::DoNotOptimize(coconjugation_set(g, x, y, 5));
}
BENCHMARK(BM_CoconjugationG2);

static void BM_LexFirstWord(benchmark::State& state) {
  const auto& g = AffineWeylGroup::of(CoxeterType::C3);
  auto x = g.parse_element("t_(3,-2,4)*s_123");
  for (auto _ : state) benchmark::DoNotOptimize(g.lex_first_reduced_word(x));
}
BENCHMARK(BM_LexFirstWord);

static void BM_Hnf(benchmark::State& state) {
  const std::vector<IntVector> rows{{6, 4, 2}, {3, -9, 12}, {15, 10, 7}, {2, 2, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(hnf(rows, 3));
}
BENCHMARK(BM_Hnf);

static void BM_SceneAndSvgA2(benchmark::State& state) {
  const auto& g = AffineWeylGroup::of(CoxeterType::A2);
  auto x = g.parse_element("0120102");
  auto result = conjugacy_class(g, x, 5);
  for (auto _ : state) benchmark::DoNotOptimize(export_svg(build_scene(g, result, x, std::nullopt)));
}
BENCHMARK(BM_SceneAndSvgA2);

BENCHMARK_MAIN();
