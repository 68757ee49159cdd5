#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "textnet/learn/dataset.hpp"

namespace textnet::learn {

enum class ClassifierKind : unsigned char { knn, naive_bayes, c45 };

inline constexpr std::array<ClassifierKind, 3> kAllClassifiers = {
    ClassifierKind::knn, ClassifierKind::naive_bayes, ClassifierKind::c45};

std::string_view to_string(ClassifierKind kind) noexcept;
ClassifierKind parse_classifier(std::string_view name);

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::knn;
  std::size_t k = 1;
  /// Multiplier on the Silverman bandwidth.
  double bandwidth_scale = 1.0;
  std::size_t max_depth = 12;
  std::size_t min_leaf = 1;
};

// ---------------------------------------------------------------------------
// k nearest neighbours

class KnnModel {
 public:
  /// Throws DataError if k == 0 or k exceeds the number of rows.
  static KnnModel train(const LabeledDataset& data, std::size_t k);

  /// Majority vote among the k nearest rows by Euclidean distance (equal
  /// distances ordered by row index). A tied vote goes to the class with the
  /// smallest summed distance, then to the earlier class.
  Label predict(std::span<const double> query) const;
  std::size_t k() const noexcept { return k_; }

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<Label> labels_;
  std::size_t k_ = 1;
};

// ---------------------------------------------------------------------------
// Parzen-window naive Bayes

/// Gaussian-kernel density estimate at x. Throws DataError for fewer than
/// two samples or a non-positive bandwidth.
double parzen_density(std::span<const double> samples, double x, double bandwidth);
/// log of parzen_density computed without underflow.
double parzen_log_density(std::span<const double> samples, double x, double bandwidth);
/// 1.06 * sample stddev * n^(-1/5); falls back to 1e-3 when the samples are constant.
double silverman_bandwidth(std::span<const double> samples);

/// Densities below exp(-700) are floored there before taking logs.
inline constexpr double kLogDensityFloor = -700.0;

class NaiveBayesModel {
 public:
  /// Needs at least two rows of each class.
  static NaiveBayesModel train(const LabeledDataset& data, double bandwidth_scale = 1.0);

  /// sum_i log P(m_i | c) for each class.
  std::array<double, kNumLabels> log_likelihoods(std::span<const double> query) const;
  /// argmax_c log P(c) + sum_i log P(m_i | c); exact ties go to the earlier class.
  Label predict(std::span<const double> query) const;
  /// Same rule with caller-supplied (possibly unnormalized) priors.
  Label predict_with_priors(std::span<const double> query,
                            const std::array<double, kNumLabels>& priors) const;

  const std::array<double, kNumLabels>& priors() const noexcept { return priors_; }
  double bandwidth(Label c, std::size_t feature) const {
    return bandwidths_[static_cast<std::size_t>(c)].at(feature);
  }

 private:
  // samples_[class][feature] -> values
  std::array<std::vector<std::vector<double>>, kNumLabels> samples_;
  std::array<std::vector<double>, kNumLabels> bandwidths_;
  std::array<double, kNumLabels> priors_{};
};

// ---------------------------------------------------------------------------
// Information-gain decision tree

/// Binary entropy in bits of a class histogram.
double entropy(const std::array<std::size_t, kNumLabels>& counts);
/// H(parent) - sum_v |S_v|/|S| H(S_v) for a two-way split.
double information_gain(const std::array<std::size_t, kNumLabels>& left,
                        const std::array<std::size_t, kNumLabels>& right);

struct TreeNode {
  bool leaf = true;
  Label label = Label::real;
  std::size_t feature = 0;
  double threshold = 0.0;  // x[feature] <= threshold goes left
  std::int32_t left = -1;
  std::int32_t right = -1;
};

class DecisionTree {
 public:
  /// Greedy binary splits maximizing information gain over midpoints of
  /// consecutive distinct values. A node becomes a leaf when pure, at
  /// max_depth, when no split leaves min_leaf rows per side, or when the
  /// best gain is not positive. Leaves predict their majority class.
  /// Throws DataError on an empty dataset.
  static DecisionTree train(const LabeledDataset& data, std::size_t max_depth,
                            std::size_t min_leaf = 1);
  /// Wraps hand-built nodes; node 0 is the root.
  static DecisionTree from_nodes(std::vector<TreeNode> nodes);

  /// Throws DataError if a tested feature is non-finite or missing.
  Label predict(std::span<const double> query) const;
  std::size_t depth() const;
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }

 private:
  std::vector<TreeNode> nodes_;
};

// ---------------------------------------------------------------------------

using TrainedModel = std::variant<KnnModel, NaiveBayesModel, DecisionTree>;

TrainedModel train(const ClassifierSpec& spec, const LabeledDataset& data);
Label predict(const TrainedModel& model, std::span<const double> query);

}  // namespace textnet::learn
