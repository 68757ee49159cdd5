#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "textnet/error.hpp"
#include "textnet/learn/classifiers.hpp"

namespace textnet::learn {

namespace {

void check_kernel_args(std::span<const double> samples, double bandwidth) {
  if (samples.size() < 2) throw DataError("Parzen estimate needs at least two samples");
  if (!(bandwidth > 0.0)) throw DataError("Parzen bandwidth must be positive");
}

}  // namespace

double parzen_log_density(std::span<const double> samples, double x, double bandwidth) {
  check_kernel_args(samples, bandwidth);
  // log-sum-exp over the kernel terms.
  double max_term = -std::numeric_limits<double>::infinity();
  for (double s : samples) {
    const double z = (x - s) / bandwidth;
    max_term = std::max(max_term, -0.5 * z * z);
  }
  double acc = 0.0;
  for (double s : samples) {
    const double z = (x - s) / bandwidth;
    acc += std::exp(-0.5 * z * z - max_term);
  }
  const double n = static_cast<double>(samples.size());
  return max_term + std::log(acc) - std::log(n * bandwidth) -
         0.5 * std::log(2.0 * std::numbers::pi);
}

double parzen_density(std::span<const double> samples, double x, double bandwidth) {
  return std::exp(parzen_log_density(samples, x, bandwidth));
}

double silverman_bandwidth(std::span<const double> samples) {
  const double n = static_cast<double>(samples.size());
  if (samples.size() < 2) throw DataError("bandwidth needs at least two samples");
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  const double h = 1.06 * sd * std::pow(n, -0.2);
  return h > 1e-3 ? h : 1e-3;
}

NaiveBayesModel NaiveBayesModel::train(const LabeledDataset& data, double bandwidth_scale) {
  data.validate_for_training();
  if (!(bandwidth_scale > 0.0)) throw ConfigError("bandwidth scale must be positive");
  const auto counts = data.class_counts();
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (counts[c] < 2) throw DataError("naive Bayes needs at least two rows of each class");
  }
  NaiveBayesModel m;
  const std::size_t nf = data.feature_count();
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    m.samples_[c].assign(nf, {});
    m.priors_[c] = static_cast<double>(counts[c]) / static_cast<double>(data.size());
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto c = static_cast<std::size_t>(data.labels[i]);
    for (std::size_t f = 0; f < nf; ++f) m.samples_[c][f].push_back(data.rows[i][f]);
  }
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    for (std::size_t f = 0; f < nf; ++f) {
      m.bandwidths_[c].push_back(bandwidth_scale * silverman_bandwidth(m.samples_[c][f]));
    }
  }
  return m;
}

std::array<double, kNumLabels> NaiveBayesModel::log_likelihoods(
    std::span<const double> query) const {
  std::array<double, kNumLabels> out{};
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    for (std::size_t f = 0; f < samples_[c].size(); ++f) {
      out[c] += std::max(kLogDensityFloor,
                         parzen_log_density(samples_[c][f], query[f], bandwidths_[c][f]));
    }
  }
  return out;
}

Label NaiveBayesModel::predict_with_priors(std::span<const double> query,
                                           const std::array<double, kNumLabels>& priors) const {
  const auto ll = log_likelihoods(query);
  const double real = std::log(priors[0]) + ll[0];
  const double fake = std::log(priors[1]) + ll[1];
  return fake > real ? Label::fake : Label::real;
}

Label NaiveBayesModel::predict(std::span<const double> query) const {
  return predict_with_priors(query, priors_);
}

}  // namespace textnet::learn
