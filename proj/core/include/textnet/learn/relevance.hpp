#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "textnet/learn/evaluation.hpp"

namespace textnet::learn {

/// Feature subsets are bitmasks over feature indices (bit j = feature j).
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxRelevanceFeatures = 16;

struct RelevanceRanking {
  ClassifierKind kind = ClassifierKind::knn;
  std::vector<std::string> feature_names;
  /// Area under the cumulative-appearance curve of each feature.
  std::vector<double> prominence;
  /// 1 = most prominent; a permutation of 1..n_f.
  std::vector<std::size_t> rank;
  /// Nonempty subsets from best to worst.
  std::vector<SubsetMask> ordered_subsets;
  /// Cross-validated accuracy indexed by mask (entry 0 unused).
  std::vector<double> accuracy_by_mask;

  std::size_t feature_count() const noexcept { return feature_names.size(); }
  std::size_t combination_count() const noexcept { return ordered_subsets.size(); }
};

/// Sorts masks 1..2^n_f-1 by accuracy descending; equal accuracies put
/// smaller subsets first, then compare the ascending feature index lists
/// lexicographically.
std::vector<SubsetMask> order_subsets(std::span<const double> accuracy_by_mask,
                                      std::size_t n_features);

/// rho(j) = sum_i sum_{k<i} xi_kj + 1/2 sum_i xi_ij, where xi_ij says whether
/// the i-th best subset uses feature j.
std::vector<double> prominence(std::span<const SubsetMask> ordered, std::size_t n_features);

/// Ranks by prominence descending; equal prominence keeps feature order.
std::vector<std::size_t> ranks_from_prominence(std::span<const double> prominence);

/// Builds a ranking from a precomputed accuracy table.
RelevanceRanking relevance_from_accuracies(std::vector<double> accuracy_by_mask,
                                           std::vector<std::string> feature_names,
                                           ClassifierKind kind);

/// Cross-validates every nonempty feature subset (same folds for all) and
/// ranks the features. Subsets are evaluated on `workers` threads (0 = all
/// cores); results are merged by mask so the output does not depend on
/// scheduling. Throws DataError for more than 16 features.
RelevanceRanking feature_relevance(const LabeledDataset& data, const ClassifierSpec& spec,
                                   std::size_t folds, std::uint64_t seed,
                                   std::size_t workers = 0);

}  // namespace textnet::learn
