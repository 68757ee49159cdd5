#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/corpus/document.hpp"
#include "textnet/network.hpp"

namespace textnet {

/// Index of each feature. The order is fixed: it defines the feature
/// indices used by relevance rankings and the CSV column order.
enum class Feature : unsigned char {
  accessibility_h2_mean,
  accessibility_h2_dev,
  accessibility_h3_mean,
  accessibility_h3_dev,
  neighbor_degree_mean,
  neighbor_degree_dev,
  betweenness_mean,
  betweenness_dev,
  clustering_mean,
  clustering_dev,
  assortativity,
  shortest_path_mean,
  shortest_path_dev,
};

inline constexpr std::size_t kFeatureCount = 13;

using FeatureArray = std::array<double, kFeatureCount>;

/// Column names in feature order.
const std::array<std::string_view, kFeatureCount>& feature_names() noexcept;

struct FeatureVector {
  std::string doc_id;
  std::optional<Label> label;
  FeatureArray values{};
};

/// The thirteen un-normalized summaries of one network. Accessibility
/// requires every node to have a neighbour; assortativity falls back to 0
/// when undefined and sets `assortativity_defined`.
struct RawFeatures {
  FeatureArray values{};
  bool assortativity_defined = true;
};
RawFeatures raw_features(const WordNetwork& net);

struct ExtractOptions {
  std::size_t n_shuffles = 20;
  /// Networks with fewer nodes are rejected as too small.
  std::size_t min_nodes = 10;
};

/// Full record of one extraction, kept for diagnostics and tests.
struct FeatureExtraction {
  FeatureVector features;          // normalized: raw / baseline_mean
  FeatureArray raw{};              // summaries on the real network
  FeatureArray baseline_mean{};    // average over shuffled networks
  FeatureArray baseline_stddev{};  // population spread over shuffled networks
};

/// Computes raw summaries on the text's network and divides each by its
/// average over `n_shuffles` networks built from shuffled copies of the
/// stream. Shuffle k uses derive_seed(seed, k + 1).
/// Throws DataError when the network is too small or a baseline average is
/// zero (the feature would be undefined).
FeatureExtraction extract_features(const TokenStream& stream, std::uint64_t seed,
                                   const ExtractOptions& options = {});

/// CSV with a "# key=value" comment preamble, a header row
/// doc_id,class,<13 features>, and one row per document. Values use the
/// shortest round-trip decimal representation.
void write_feature_csv(std::ostream& out, const std::vector<FeatureVector>& rows,
                       const std::vector<std::pair<std::string, std::string>>& preamble = {});
std::string feature_csv(const std::vector<FeatureVector>& rows,
                        const std::vector<std::pair<std::string, std::string>>& preamble = {});
/// Reads the format above. Throws DataError on malformed input.
std::vector<FeatureVector> read_feature_csv(std::istream& in);

/// Shortest round-trip representation of a double.
std::string format_double(double value);

}  // namespace textnet
