#include <benchmark/benchmark.h>

#include "densepts/constructions.hpp"
#include "densepts_app/runner.hpp"

using namespace densepts;

static void BM_Factorize(benchmark::State& state) {
  const Integer n = Integer("1000000007") * Integer("998244353") * Integer("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

static void BM_SUnitEnumerator(benchmark::State& state) {
  const PlaceSet S{2, 3, 5};
  for (auto _ : state) benchmark::DoNotOptimize(s_unit_enumerator(S, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SUnitEnumerator)->Arg(2)->Arg(4)->Arg(8);

static void BM_IsIntegralPoint(benchmark::State& state) {
  DivisorConfig D(3, {HomForm::linear({1, 0, 0, 0}), HomForm::linear({0, 1, 0, 0}),
                      LinearSubspace({{Integer(1), Integer(2), Integer(3), Integer(0)},
                                      {Integer(1), Integer(1), Integer(1), Integer(1)}})});
  const PlaceSet S{2, 3, 5};
  const ProjPoint x = ProjPoint::from_integers({Integer(64), Integer(3), Integer(25), Integer(1)});
  for (auto _ : state) benchmark::DoNotOptimize(is_integral_point(x, D, S));
}
BENCHMARK(BM_IsIntegralPoint);

static void BM_BeukersFamily(benchmark::State& state) {
  const ProjPoint A = ProjPoint::from_integers({Integer(1), Integer(0)});
  const ProjPoint B = ProjPoint::from_integers({Integer(0), Integer(1)});
  DivisorConfig D(1, {HomForm::linear({1, 0}), HomForm::linear({0, 1})});
  const PlaceSet S{2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(beukers_family(A, B, D, S, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BeukersFamily)->Arg(4)->Arg(8);

static void BM_CorpusScenario(benchmark::State& state, const char* name) {
  const auto scenario = app::load_json_file(std::string(DENSEPTS_CORPUS_DIR) + "/" + name + ".json");
  for (auto _ : state) benchmark::DoNotOptimize(app::run_scenario(scenario));
}
BENCHMARK_CAPTURE(BM_CorpusScenario, theorem1_p2, "theorem1_p2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusScenario, theorem1_p3, "theorem1_p3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorpusScenario, concurrent_lines_r2, "concurrent_lines_r2")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
