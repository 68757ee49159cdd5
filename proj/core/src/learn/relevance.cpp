#include "textnet/learn/relevance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "textnet/error.hpp"
#include "textnet/parallel.hpp"

namespace textnet::learn {

namespace {

// Lexicographic comparison of the ascending index lists of two masks of
// equal size: the first differing element is the lowest bit set in exactly
// one mask, and the mask holding it compares smaller.
bool lex_less(SubsetMask a, SubsetMask b) {
  const SubsetMask diff = a ^ b;
  if (diff == 0) return false;
  const SubsetMask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

}  // namespace

std::vector<SubsetMask> order_subsets(std::span<const double> accuracy_by_mask,
                                      std::size_t n_features) {
  const std::size_t count = std::size_t{1} << n_features;
  if (accuracy_by_mask.size() != count) {
    throw DataError("accuracy table must have 2^n_features entries");
  }
  std::vector<SubsetMask> masks(count - 1);
  std::iota(masks.begin(), masks.end(), SubsetMask{1});
  std::sort(masks.begin(), masks.end(), [&](SubsetMask a, SubsetMask b) {
    if (accuracy_by_mask[a] != accuracy_by_mask[b]) {
      return accuracy_by_mask[a] > accuracy_by_mask[b];
    }
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
  });
  return masks;
}

std::vector<double> prominence(std::span<const SubsetMask> ordered, std::size_t n_features) {
  std::vector<double> rho(n_features, 0.0);
  // Running f(i-1) for each feature: sum_{i} f(i-1) + 1/2 sum_i xi_ij.
  std::vector<double> cumulative(n_features, 0.0);
  for (SubsetMask mask : ordered) {
    for (std::size_t j = 0; j < n_features; ++j) {
      const double xi = (mask >> j) & 1U ? 1.0 : 0.0;
      rho[j] += cumulative[j] + 0.5 * xi;
      cumulative[j] += xi;
    }
  }
  return rho;
}

std::vector<std::size_t> ranks_from_prominence(std::span<const double> rho) {
  std::vector<std::size_t> order(rho.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rho[a] > rho[b]; });
  std::vector<std::size_t> rank(rho.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos + 1;
  return rank;
}

RelevanceRanking relevance_from_accuracies(std::vector<double> accuracy_by_mask,
                                           std::vector<std::string> feature_names,
                                           ClassifierKind kind) {
  const std::size_t nf = feature_names.size();
  if (nf == 0 || nf > kMaxRelevanceFeatures) {
    throw DataError("exhaustive relevance supports 1 to 16 features; sample subsets for more");
  }
  RelevanceRanking out;
  out.kind = kind;
  out.feature_names = std::move(feature_names);
  out.ordered_subsets = order_subsets(accuracy_by_mask, nf);
  out.accuracy_by_mask = std::move(accuracy_by_mask);
  out.prominence = prominence(out.ordered_subsets, nf);
  out.rank = ranks_from_prominence(out.prominence);
  return out;
}

RelevanceRanking feature_relevance(const LabeledDataset& data, const ClassifierSpec& spec,
                                   std::size_t folds, std::uint64_t seed, std::size_t workers) {
  const std::size_t nf = data.feature_count();
  if (nf == 0 || nf > kMaxRelevanceFeatures) {
    throw DataError("exhaustive relevance supports 1 to 16 features (got " + std::to_string(nf) +
                    "); sample subsets for more");
  }
  data.validate_for_training();
  const auto fold_of = stratified_folds(data.labels, folds, seed);
  const std::size_t count = std::size_t{1} << nf;
  std::vector<double> accuracy(count, 0.0);
  parallel_for(
      count - 1,
      [&](std::size_t i) {
        const auto mask = static_cast<SubsetMask>(i + 1);
        std::vector<std::size_t> features;
        for (std::size_t j = 0; j < nf; ++j) {
          if ((mask >> j) & 1U) features.push_back(j);
        }
        accuracy[mask] =
            cross_validate_with_folds(data, spec, fold_of, folds, features).accuracy;
      },
      workers);
  return relevance_from_accuracies(std::move(accuracy), data.feature_names, spec.kind);
}

}  // namespace textnet::learn
