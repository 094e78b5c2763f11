#include <benchmark/benchmark.h>

#include "admintm/engine.hpp"
#include "admintm/io_schema.hpp"
#include "admintm/process_model.hpp"
#include "admintm/report.hpp"

namespace {

using namespace admintm;

SoftwareProfile sample_profile() {
  SoftwareProfile p;
  p.name = "bench";
  p.input_modalities = {InputModality::Image, InputModality::NaturalLanguageText};
  p.uses_feature_engineering = false;
  p.monitors_model_in_deployment = false;
  return p;
}

void BM_DefaultGraph(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(default_graph());
}
BENCHMARK(BM_DefaultGraph);

void BM_ExpandWildcards(benchmark::State& state) {
  const ProcessGraph g = default_graph();
  for (auto _ : state) benchmark::DoNotOptimize(expand_wildcards(g));
}
BENCHMARK(BM_ExpandWildcards);

void BM_ModelThreats(benchmark::State& state) {
  const SoftwareProfile p = sample_profile();
  for (auto _ : state) benchmark::DoNotOptimize(model_threats(p));
}
BENCHMARK(BM_ModelThreats);

void BM_SerializeResult(benchmark::State& state) {
  const Document doc = Document::of(model_threats(sample_profile()));
  for (auto _ : state) benchmark::DoNotOptimize(serialize(doc));
}
BENCHMARK(BM_SerializeResult);

void BM_ParseResult(benchmark::State& state) {
  const std::string text = serialize(Document::of(model_threats(sample_profile())));
  for (auto _ : state) benchmark::DoNotOptimize(parse(text, DocumentKind::Result));
}
BENCHMARK(BM_ParseResult);

void BM_RenderMarkdown(benchmark::State& state) {
  const ThreatModelResult r = model_threats(sample_profile());
  for (auto _ : state) benchmark::DoNotOptimize(render(r));
}
BENCHMARK(BM_RenderMarkdown);

}  // namespace

BENCHMARK_MAIN();
