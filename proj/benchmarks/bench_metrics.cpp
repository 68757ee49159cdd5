#include <benchmark/benchmark.h>

#include "textnet/corpus/grammar.hpp"
#include "textnet/corpus/lexicon.hpp"
#include "textnet/features.hpp"
#include "textnet/metrics.hpp"
#include "textnet/network.hpp"

namespace {

using namespace textnet;

// Lemma stream of a generated document of about `words` words.
TokenStream stream_of(std::size_t words) {
  const auto doc = generate_gibberish(GibberishGrammar::bundled(), 11, words);
  return preprocess(doc.body, Lexicon::bundled(), doc.id);
}

void BM_BuildNetwork(benchmark::State& state) {
  const auto s = stream_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_network(s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.lemmas.size()));
}
BENCHMARK(BM_BuildNetwork)->Arg(1000)->Arg(4000);

void BM_Accessibility(benchmark::State& state) {
  const auto net = build_network(stream_of(static_cast<std::size_t>(state.range(0))));
  const auto h = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(accessibility(net, h));
  state.counters["nodes"] = static_cast<double>(net.node_count());
}
BENCHMARK(BM_Accessibility)->Args({1000, 2})->Args({1000, 3})->Args({4000, 3});

void BM_PathMetrics(benchmark::State& state) {
  const auto net = build_network(stream_of(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(path_metrics(net));
  state.counters["nodes"] = static_cast<double>(net.node_count());
}
BENCHMARK(BM_PathMetrics)->Arg(1000)->Arg(4000);

void BM_Assortativity(benchmark::State& state) {
  const auto net = build_network(stream_of(4000));
  for (auto _ : state) benchmark::DoNotOptimize(assortativity(net));
}
BENCHMARK(BM_Assortativity);

// One document end to end: real network plus n_shuffles randomized copies.
void BM_ExtractFeatures(benchmark::State& state) {
  const auto s = stream_of(1500);
  ExtractOptions opts;
  opts.n_shuffles = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extract_features(s, 3, opts));
}
BENCHMARK(BM_ExtractFeatures)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
