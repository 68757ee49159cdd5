#include <algorithm>
#include <cmath>
#include <numeric>

#include "textnet/error.hpp"
#include "textnet/learn/classifiers.hpp"

namespace textnet::learn {

std::string_view to_string(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::knn: return "knn";
    case ClassifierKind::naive_bayes: return "nbayes";
    case ClassifierKind::c45: return "c45";
  }
  return "unknown";
}

ClassifierKind parse_classifier(std::string_view name) {
  if (name == "knn") return ClassifierKind::knn;
  if (name == "nbayes" || name == "naive_bayes") return ClassifierKind::naive_bayes;
  if (name == "c45" || name == "tree") return ClassifierKind::c45;
  throw ConfigError("unknown classifier '" + std::string(name) + "' (knn, nbayes, c45)");
}

KnnModel KnnModel::train(const LabeledDataset& data, std::size_t k) {
  if (k == 0) throw DataError("k must be at least 1");
  if (k > data.size()) {
    throw DataError("k = " + std::to_string(k) + " exceeds the " + std::to_string(data.size()) +
                    " training rows");
  }
  KnnModel m;
  m.rows_ = data.rows;
  m.labels_ = data.labels;
  m.k_ = k;
  return m;
}

Label KnnModel::predict(std::span<const double> query) const {
  const std::size_t n = rows_.size();
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d2 = 0.0;
    for (std::size_t f = 0; f < query.size(); ++f) {
      const double d = rows_[i][f] - query[f];
      d2 += d * d;
    }
    dist[i] = d2;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto closer = [&](std::size_t a, std::size_t b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k_), order.end(),
                    closer);
  std::array<std::size_t, kNumLabels> votes{};
  std::array<double, kNumLabels> summed{};
  for (std::size_t r = 0; r < k_; ++r) {
    const auto c = static_cast<std::size_t>(labels_[order[r]]);
    ++votes[c];
    summed[c] += std::sqrt(dist[order[r]]);
  }
  if (votes[0] != votes[1]) return votes[0] > votes[1] ? Label::real : Label::fake;
  return summed[1] < summed[0] ? Label::fake : Label::real;
}

TrainedModel train(const ClassifierSpec& spec, const LabeledDataset& data) {
  switch (spec.kind) {
    case ClassifierKind::knn: return KnnModel::train(data, spec.k);
    case ClassifierKind::naive_bayes: return NaiveBayesModel::train(data, spec.bandwidth_scale);
    case ClassifierKind::c45: return DecisionTree::train(data, spec.max_depth, spec.min_leaf);
  }
  throw ConfigError("unknown classifier kind");
}

Label predict(const TrainedModel& model, std::span<const double> query) {
  return std::visit([&](const auto& m) { return m.predict(query); }, model);
}

}  // namespace textnet::learn
