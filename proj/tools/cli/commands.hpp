#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cli/config.hpp"
#include "textnet/learn/evaluation.hpp"
#include "textnet/learn/pca.hpp"
#include "textnet/learn/relevance.hpp"

namespace textnet::cli {

// Each command reads its inputs from the locations named in the config,
// writes its artifacts atomically under output_dir (generate: under
// generate.output_dir) and logs progress to `log`.

struct GenerateOutcome {
  std::filesystem::path manifest;
  std::size_t documents = 0;
};
GenerateOutcome cmd_generate(const RunConfig& config, std::ostream& log);

struct IngestOutcome {
  std::size_t documents = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};
IngestOutcome cmd_ingest(const RunConfig& config, std::ostream& log);

struct EvaluateOutcome {
  std::vector<learn::ClassifierKind> classifiers;
  /// univariate[feature][classifier] accuracy
  std::vector<std::vector<double>> univariate;
  std::vector<learn::EvaluationReport> multivariate;  // per classifier
};
EvaluateOutcome cmd_evaluate(const RunConfig& config, std::ostream& log);

struct RelevanceOutcome {
  std::vector<learn::RelevanceRanking> rankings;  // per classifier
  /// Pairwise Spearman coefficients of the classifiers' feature ranks.
  std::vector<std::vector<double>> spearman;
};
RelevanceOutcome cmd_relevance(const RunConfig& config, std::ostream& log);

struct PcaOutcome {
  learn::PcaResult pca;
  std::vector<std::string> ids;
  std::vector<Label> labels;
};
PcaOutcome cmd_pca(const RunConfig& config, std::ostream& log);

/// evaluate, relevance (when enabled) and pca, plus report.json bundling
/// every table.
void cmd_report(const RunConfig& config, std::ostream& log);

/// Loads the feature matrix written by ingest.
learn::LabeledDataset load_feature_matrix(const RunConfig& config, std::ostream& log);

}  // namespace textnet::cli
