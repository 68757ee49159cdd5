#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "textnet/learn/evaluation.hpp"
#include "textnet/learn/relevance.hpp"
#include "textnet/rng.hpp"

namespace {

using namespace textnet;
using namespace textnet::learn;

// 120 rows like the prose-vs-gibberish matrix: a few shifted columns, the rest noise.
LabeledDataset dataset(std::size_t features) {
  Rng rng(9);
  auto gaussian = [&] {
    const double u1 = 1.0 - uniform_unit(rng), u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  std::vector<std::vector<double>> rows;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < 120; ++i) {
    const bool fake = i >= 60;
    std::vector<double> r;
    for (std::size_t j = 0; j < features; ++j) r.push_back(gaussian() + (fake && j < 3 ? 1.5 : 0.0));
    rows.push_back(r);
    labels.push_back(fake ? Label::fake : Label::real);
  }
  return LabeledDataset::from_rows(rows, labels);
}

void BM_CrossValidate(benchmark::State& state) {
  const auto data = dataset(13);
  const ClassifierSpec spec{static_cast<ClassifierKind>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(data, spec, 10, 1));
  state.SetLabel(std::string(to_string(spec.kind)));
}
BENCHMARK(BM_CrossValidate)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

// Exhaustive sweep; cost doubles with every feature, so 13 features take
// about 2^5 times as long as the 8-feature case here.
void BM_RelevanceSweep(benchmark::State& state) {
  const auto data = dataset(static_cast<std::size_t>(state.range(1)));
  const ClassifierSpec spec{static_cast<ClassifierKind>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(feature_relevance(data, spec, 10, 1));
  state.SetLabel(std::string(to_string(spec.kind)));
}
BENCHMARK(BM_RelevanceSweep)
    ->ArgsProduct({{0, 1, 2}, {8}})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
