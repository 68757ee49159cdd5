#include "textnet/learn/evaluation.hpp"

#include <algorithm>
#include <numeric>

#include "textnet/error.hpp"
#include "textnet/rng.hpp"

namespace textnet::learn {

std::vector<std::size_t> stratified_folds(std::span<const Label> labels, std::size_t folds,
                                          std::uint64_t seed) {
  if (folds < 2) throw ConfigError("cross-validation needs at least 2 folds");
  std::vector<std::size_t> fold_of(labels.size(), 0);
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (static_cast<std::size_t>(labels[i]) == c) members.push_back(i);
    }
    if (members.size() < folds) {
      throw DataError("class '" + std::string(to_string(static_cast<Label>(c))) + "' has " +
                      std::to_string(members.size()) + " rows, fewer than " +
                      std::to_string(folds) + " folds");
    }
    Rng rng(derive_seed(seed, c));
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[uniform_index(rng, i)]);
    }
    // The second class continues the round-robin where the first stopped so
    // fold sizes differ by at most one overall.
    const auto offset = c == 0 ? std::size_t{0}
                                  : static_cast<std::size_t>(
                                        std::count(labels.begin(), labels.end(), Label::real));
    for (std::size_t r = 0; r < members.size(); ++r) fold_of[members[r]] = (offset + r) % folds;
  }
  return fold_of;
}

EvaluationReport cross_validate_with_folds(const LabeledDataset& data, const ClassifierSpec& spec,
                                           std::span<const std::size_t> fold_of,
                                           std::size_t folds,
                                           std::span<const std::size_t> features) {
  data.validate_for_training();
  if (fold_of.size() != data.size()) throw DataError("fold assignment does not match the rows");
  std::vector<std::size_t> all;
  if (features.empty()) {
    all.resize(data.feature_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    features = all;
  }
  const LabeledDataset selected = data.select_features(features);

  EvaluationReport report;
  report.kind = spec.kind;
  report.features.assign(features.begin(), features.end());
  for (std::size_t fold = 0; fold < folds; ++fold) {
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t i = 0; i < data.size(); ++i) {
      (fold_of[i] == fold ? test_rows : train_rows).push_back(i);
    }
    if (test_rows.empty()) continue;
    const LabeledDataset train_raw = selected.select_rows(train_rows);
    const Standardizer scaler = Standardizer::fit(train_raw);
    const TrainedModel model = train(spec, scaler.transform(train_raw));
    std::size_t correct = 0;
    for (std::size_t i : test_rows) {
      const Label guess = predict(model, scaler.transform(selected.rows[i]));
      const Label truth = data.labels[i];
      ++report.confusion[static_cast<std::size_t>(truth)][static_cast<std::size_t>(guess)];
      if (guess == truth) ++correct;
    }
    report.correct += correct;
    report.total += test_rows.size();
    report.fold_accuracies.push_back(static_cast<double>(correct) /
                                     static_cast<double>(test_rows.size()));
  }
  report.accuracy =
      report.total == 0 ? 0.0 : static_cast<double>(report.correct) / static_cast<double>(report.total);
  return report;
}

EvaluationReport cross_validate(const LabeledDataset& data, const ClassifierSpec& spec,
                                std::size_t folds, std::uint64_t seed,
                                std::span<const std::size_t> features) {
  data.validate_for_training();
  const auto fold_of = stratified_folds(data.labels, folds, seed);
  return cross_validate_with_folds(data, spec, fold_of, folds, features);
}

}  // namespace textnet::learn
