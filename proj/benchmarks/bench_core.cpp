#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "ecohome/kb.hpp"
#include "ecohome/query.hpp"
#include "ecohome/stats.hpp"

namespace {

using namespace ecohome;

// `facts` facts drawing each facet from `values` distinct labels.
KnowledgeBase make_kb(std::size_t facts, int values) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, values - 1);
  auto label = [&](const char* prefix) { return std::string(prefix) + " " + std::to_string(pick(rng)); };
  std::vector<AdviceFact> out;
  for (std::size_t i = 0; i < facts; ++i) {
    out.push_back({label("Area"), label("Stage"), label("Type"), label("Ghg"),
                   "Advice number " + std::to_string(i), "Because it's 'cheaper' " + std::to_string(i)});
  }
  return KnowledgeBase(std::move(out));
}

void BM_ParseKb(benchmark::State& state) {
  const std::string text = serialize_kb(make_kb(static_cast<std::size_t>(state.range(0)), 8));
  for (auto _ : state) benchmark::DoNotOptimize(parse_kb(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseKb)->Arg(20)->Arg(200)->Arg(5000);

void BM_DistinctValues(benchmark::State& state) {
  const KnowledgeBase kb = make_kb(static_cast<std::size_t>(state.range(0)), 8);
  const AdviceFact& first = kb.facts().front();
  const Selection sel = Selection::from_prefix({first.area, first.stage, first.facet_type});
  for (auto _ : state) {
    benchmark::DoNotOptimize(distinct_values(kb, FacetKey::Area, {}));
    benchmark::DoNotOptimize(distinct_values(kb, FacetKey::Ghg, sel));
  }
}
BENCHMARK(BM_DistinctValues)->Arg(200)->Arg(5000);

void BM_ResolveAdvice(benchmark::State& state) {
  const KnowledgeBase kb = make_kb(static_cast<std::size_t>(state.range(0)), 8);
  const AdviceFact& first = kb.facts().front();
  const Selection sel = Selection::from_prefix({first.area, first.stage, first.facet_type, first.ghg});
  for (auto _ : state) benchmark::DoNotOptimize(resolve_advice(kb, sel));
}
BENCHMARK(BM_ResolveAdvice)->Arg(200)->Arg(5000);

void BM_Summarize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> minutes(12.0, 4.0);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (double& x : xs) x = minutes(rng);
  for (auto _ : state) benchmark::DoNotOptimize(summarize(xs));
}
BENCHMARK(BM_Summarize)->Arg(7)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
