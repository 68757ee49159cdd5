#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "textnet/learn/classifiers.hpp"

namespace textnet::cli {

struct GenerateConfig {
  std::filesystem::path grammar = "${data}/grammar/scientific.cfg";
  std::size_t count = 60;
  std::size_t min_words = 1000;
  std::size_t max_words = 2000;
  std::filesystem::path output_dir = "corpus/fake";
};

/// Everything a run depends on. Relative paths are resolved against the
/// directory holding the config file; a leading "${data}" stands for the
/// bundled data directory.
struct RunConfig {
  std::filesystem::path real_manifest = "${data}/corpus/real/manifest.tsv";
  std::filesystem::path fake_manifest = "corpus/fake/manifest.tsv";
  std::filesystem::path lexicon_dir = "${data}/lexicon";
  std::size_t n_shuffles = 20;
  std::size_t min_nodes = 10;
  std::uint64_t seed = 42;
  std::vector<learn::ClassifierKind> classifiers{learn::kAllClassifiers.begin(),
                                                 learn::kAllClassifiers.end()};
  std::size_t knn_k = 1;
  double bandwidth_scale = 1.0;
  std::size_t max_depth = 12;
  std::size_t min_leaf = 1;
  std::size_t folds = 10;
  bool relevance = true;
  std::filesystem::path output_dir = "out";
  std::size_t workers = 0;  // 0 = all cores; never changes results
  GenerateConfig generate;

  /// FNV-1a of the canonical JSON (sorted keys, defaults filled in, paths
  /// as written, workers left out), as 16 hex digits.
  std::string hash;
  std::filesystem::path base_dir;

  std::filesystem::path resolve(const std::filesystem::path& p) const;
  learn::ClassifierSpec spec(learn::ClassifierKind kind) const;
  std::filesystem::path output(const std::string& file) const { return resolve(output_dir) / file; }
  /// "# config_hash=...\n# seed=...\n" for CSV artifacts.
  std::string csv_preamble() const;
};

/// Throws ConfigError on unknown keys, wrong types or out-of-range values.
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

/// Canonical JSON of a config with every field present.
std::string config_json(const RunConfig& config);
/// Every field at its default.
std::string config_template();

}  // namespace textnet::cli
