#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "textnet/learn/classifiers.hpp"

namespace textnet::learn {

struct EvaluationReport {
  ClassifierKind kind = ClassifierKind::knn;
  std::vector<std::size_t> features;  // column indices of the input dataset
  double accuracy = 0.0;              // correct / total
  std::vector<double> fold_accuracies;
  /// confusion[true class][predicted class]
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> confusion{};
  std::size_t correct = 0;
  std::size_t total = 0;
};

/// Fold index of every row. Each class is shuffled with the seed and dealt
/// round-robin, so folds are stratified and partition the rows.
/// Throws DataError if a class has fewer rows than folds.
std::vector<std::size_t> stratified_folds(std::span<const Label> labels, std::size_t folds,
                                          std::uint64_t seed);

/// Stratified k-fold cross-validation on the chosen feature columns (all
/// when empty). Standardization and model statistics are fitted on each
/// training fold only.
EvaluationReport cross_validate(const LabeledDataset& data, const ClassifierSpec& spec,
                                std::size_t folds, std::uint64_t seed,
                                std::span<const std::size_t> features = {});

/// Same as above with the fold assignment supplied by the caller.
EvaluationReport cross_validate_with_folds(const LabeledDataset& data, const ClassifierSpec& spec,
                                           std::span<const std::size_t> fold_of,
                                           std::size_t folds,
                                           std::span<const std::size_t> features = {});

}  // namespace textnet::learn
