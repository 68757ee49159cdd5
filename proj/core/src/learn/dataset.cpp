#include "textnet/learn/dataset.hpp"

#include <cmath>

#include "textnet/error.hpp"

namespace textnet::learn {

std::array<std::size_t, kNumLabels> LabeledDataset::class_counts() const noexcept {
  std::array<std::size_t, kNumLabels> counts{};
  for (Label l : labels) ++counts[static_cast<std::size_t>(l)];
  return counts;
}

void LabeledDataset::validate() const {
  if (labels.size() != rows.size() || ids.size() != rows.size()) {
    throw DataError("dataset has mismatched row, label and id counts");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != feature_names.size()) {
      throw DataError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " values, expected " + std::to_string(feature_names.size()));
    }
    for (double v : rows[i]) {
      if (!std::isfinite(v)) throw DataError("row '" + ids[i] + "' has a non-finite value");
    }
  }
}

void LabeledDataset::validate_for_training() const {
  validate();
  const auto counts = class_counts();
  if (counts[0] == 0 || counts[1] == 0) {
    throw DataError("training data must contain both real and fake rows");
  }
}

LabeledDataset LabeledDataset::select_features(std::span<const std::size_t> features) const {
  LabeledDataset out;
  out.labels = labels;
  out.ids = ids;
  for (std::size_t f : features) {
    if (f >= feature_names.size()) throw DataError("feature index out of range");
    out.feature_names.push_back(feature_names[f]);
  }
  out.rows.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<double> r;
    r.reserve(features.size());
    for (std::size_t f : features) r.push_back(row[f]);
    out.rows.push_back(std::move(r));
  }
  return out;
}

LabeledDataset LabeledDataset::select_rows(std::span<const std::size_t> indices) const {
  LabeledDataset out;
  out.feature_names = feature_names;
  out.rows.reserve(indices.size());
  for (std::size_t i : indices) {
    out.rows.push_back(rows.at(i));
    out.labels.push_back(labels[i]);
    out.ids.push_back(ids[i]);
  }
  return out;
}

LabeledDataset LabeledDataset::from_features(const std::vector<FeatureVector>& rows) {
  LabeledDataset out;
  for (auto name : textnet::feature_names()) out.feature_names.emplace_back(name);
  for (const auto& fv : rows) {
    if (!fv.label) throw DataError("document '" + fv.doc_id + "' has no class label");
    out.rows.emplace_back(fv.values.begin(), fv.values.end());
    out.labels.push_back(*fv.label);
    out.ids.push_back(fv.doc_id);
  }
  out.validate();
  return out;
}

LabeledDataset LabeledDataset::from_rows(std::vector<std::vector<double>> rows,
                                         std::vector<Label> labels) {
  LabeledDataset out;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t f = 0; f < width; ++f) out.feature_names.push_back("f" + std::to_string(f));
  for (std::size_t i = 0; i < rows.size(); ++i) out.ids.push_back("row" + std::to_string(i));
  out.rows = std::move(rows);
  out.labels = std::move(labels);
  out.validate();
  return out;
}

Standardizer Standardizer::fit(const LabeledDataset& train) {
  Standardizer s;
  const std::size_t n = train.size();
  if (n == 0) throw DataError("cannot standardize an empty training set");
  for (std::size_t f = 0; f < train.feature_count(); ++f) {
    double sum = 0.0;
    for (const auto& row : train.rows) sum += row[f];
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& row : train.rows) ss += (row[f] - mean) * (row[f] - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n));
    if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) {
      s.dropped.push_back(f);
      continue;
    }
    s.kept.push_back(f);
    s.mean.push_back(mean);
    s.stddev.push_back(sd);
  }
  return s;
}

std::vector<double> Standardizer::transform(std::span<const double> row) const {
  std::vector<double> out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[i] = (row[kept[i]] - mean[i]) / stddev[i];
  return out;
}

LabeledDataset Standardizer::transform(const LabeledDataset& data) const {
  LabeledDataset out;
  for (std::size_t f : kept) out.feature_names.push_back(data.feature_names.at(f));
  out.labels = data.labels;
  out.ids = data.ids;
  out.rows.reserve(data.size());
  for (const auto& row : data.rows) out.rows.push_back(transform(row));
  return out;
}

}  // namespace textnet::learn
