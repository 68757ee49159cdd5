#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "textnet/corpus/document.hpp"
#include "textnet/features.hpp"

namespace textnet::learn {

/// Feature rows with class labels. Row i has labels[i] and ids[i].
struct LabeledDataset {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> rows;
  std::vector<Label> labels;
  std::vector<std::string> ids;

  std::size_t size() const noexcept { return rows.size(); }
  std::size_t feature_count() const noexcept { return feature_names.size(); }
  std::array<std::size_t, kNumLabels> class_counts() const noexcept;

  /// Throws DataError on ragged rows, non-finite entries or mismatched
  /// label/id counts.
  void validate() const;
  /// validate() plus: both classes present.
  void validate_for_training() const;

  /// Columns in the given order.
  LabeledDataset select_features(std::span<const std::size_t> features) const;
  LabeledDataset select_rows(std::span<const std::size_t> indices) const;

  /// Every row must carry a label.
  static LabeledDataset from_features(const std::vector<FeatureVector>& rows);
  /// Builds a dataset with generic names f0, f1, ...
  static LabeledDataset from_rows(std::vector<std::vector<double>> rows, std::vector<Label> labels);
};

/// Per-feature z-scoring fitted on training rows. Features with zero
/// variance are dropped and listed in `dropped`.
struct Standardizer {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
  std::vector<double> mean;    // per kept feature
  std::vector<double> stddev;  // population, per kept feature

  static Standardizer fit(const LabeledDataset& train);
  std::vector<double> transform(std::span<const double> row) const;
  LabeledDataset transform(const LabeledDataset& data) const;
};

}  // namespace textnet::learn
