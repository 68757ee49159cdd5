#include "cli/commands.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "textnet/corpus/document.hpp"
#include "textnet/corpus/grammar.hpp"
#include "textnet/corpus/lexicon.hpp"
#include "textnet/error.hpp"
#include "textnet/learn/statistics.hpp"
#include "textnet/pipeline.hpp"

namespace textnet::cli {

using nlohmann::ordered_json;

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string name(learn::ClassifierKind k) { return std::string(learn::to_string(k)); }

ordered_json stamp(const RunConfig& config) {
  return ordered_json{{"config_hash", config.hash}, {"seed", config.seed}};
}

void write_json(const RunConfig& config, const std::string& file, const ordered_json& body) {
  write_file_atomic(config.output(file), body.dump(2) + "\n");
}

void need_file(const std::filesystem::path& p, const std::string& what) {
  if (!std::filesystem::is_regular_file(p)) throw ConfigError(what + " not found: " + p.string());
}

std::vector<ManifestEntry> manifest_for(const std::filesystem::path& path, Label expected) {
  auto entries = read_manifest(path);
  for (const auto& e : entries) {
    if (e.label != expected)
      throw DataError(path.string() + ": document '" + e.id + "' is labelled " +
                      std::string(to_string(e.label)) + " in the " +
                      std::string(to_string(expected)) + " manifest");
    if (e.id.find_first_of(",\"") != std::string::npos)
      throw DataError(path.string() + ": document id '" + e.id + "' contains ',' or '\"'");
  }
  return entries;
}

// Per-feature accuracies of a classifier on single columns.
std::vector<double> univariate_column(const learn::LabeledDataset& data, const RunConfig& config,
                                      learn::ClassifierKind kind) {
  std::vector<double> acc(data.feature_count());
  for (std::size_t f = 0; f < data.feature_count(); ++f) {
    const std::size_t cols[1] = {f};
    acc[f] = learn::cross_validate(data, config.spec(kind), config.folds, config.seed, cols).accuracy;
  }
  return acc;
}

ordered_json evaluate_json(const RunConfig& config, const std::vector<std::string>& features,
                           const EvaluateOutcome& out, bool multivariate) {
  ordered_json j = stamp(config);
  j["folds"] = config.folds;
  if (!multivariate) {
    ordered_json rows = ordered_json::array();
    for (std::size_t f = 0; f < features.size(); ++f) {
      ordered_json row{{"feature", features[f]}};
      for (std::size_t c = 0; c < out.classifiers.size(); ++c)
        row[name(out.classifiers[c])] = out.univariate[f][c];
      rows.push_back(row);
    }
    j["univariate"] = rows;
    return j;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& r : out.multivariate) {
    rows.push_back({{"classifier", name(r.kind)},
                    {"accuracy", r.accuracy},
                    {"correct", r.correct},
                    {"total", r.total},
                    {"confusion", {{"real_as_real", r.confusion[0][0]},
                                   {"real_as_fake", r.confusion[0][1]},
                                   {"fake_as_real", r.confusion[1][0]},
                                   {"fake_as_fake", r.confusion[1][1]}}},
                    {"fold_accuracies", r.fold_accuracies}});
  }
  j["multivariate"] = rows;
  return j;
}

ordered_json relevance_json(const RunConfig& config, const RelevanceOutcome& out) {
  ordered_json j = stamp(config);
  j["folds"] = config.folds;
  ordered_json rankings = ordered_json::array();
  for (const auto& r : out.rankings) {
    ordered_json feats = ordered_json::array();
    for (std::size_t f = 0; f < r.feature_count(); ++f)
      feats.push_back({{"feature", r.feature_names[f]},
                       {"rho", r.prominence[f]},
                       {"rank", r.rank[f]}});
    const auto best = r.ordered_subsets.front();
    std::vector<std::string> best_features;
    for (std::size_t f = 0; f < r.feature_count(); ++f)
      if (best >> f & 1u) best_features.push_back(r.feature_names[f]);
    rankings.push_back({{"classifier", name(r.kind)},
                        {"combinations", r.combination_count()},
                        {"best_subset", best_features},
                        {"best_accuracy", r.accuracy_by_mask[best]},
                        {"features", feats}});
  }
  j["rankings"] = rankings;
  ordered_json sp = ordered_json::object();
  for (std::size_t a = 0; a < out.rankings.size(); ++a)
    for (std::size_t b = 0; b < out.rankings.size(); ++b)
      sp[name(out.rankings[a].kind)][name(out.rankings[b].kind)] = out.spearman[a][b];
  j["spearman"] = sp;
  return j;
}

ordered_json pca_json(const RunConfig& config, const PcaOutcome& out) {
  ordered_json j = stamp(config);
  j["explained_variance_ratio"] = out.pca.explained_variance_ratio;
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < out.ids.size(); ++i)
    points.push_back({{"doc_id", out.ids[i]},
                      {"class", std::string(to_string(out.labels[i]))},
                      {"x", out.pca.coordinates[i][0]},
                      {"y", out.pca.coordinates[i][1]}});
  j["points"] = points;
  return j;
}

EvaluateOutcome evaluate(const RunConfig& config, const learn::LabeledDataset& data,
                         std::ostream& log) {
  data.validate_for_training();
  EvaluateOutcome out;
  out.classifiers = config.classifiers;
  out.univariate.assign(data.feature_count(), std::vector<double>(config.classifiers.size()));
  for (std::size_t c = 0; c < config.classifiers.size(); ++c) {
    const auto kind = config.classifiers[c];
    const auto column = univariate_column(data, config, kind);
    for (std::size_t f = 0; f < column.size(); ++f) out.univariate[f][c] = column[f];
    out.multivariate.push_back(learn::cross_validate(data, config.spec(kind), config.folds, config.seed));
    log << "evaluate: " << name(kind) << " multivariate accuracy "
        << format_double(out.multivariate.back().accuracy) << '\n';
  }

  std::ostringstream uni;
  uni << config.csv_preamble() << "# folds=" << config.folds << "\nfeature";
  for (auto k : out.classifiers) uni << ',' << name(k);
  uni << '\n';
  for (std::size_t f = 0; f < data.feature_count(); ++f) {
    uni << data.feature_names[f];
    for (double a : out.univariate[f]) uni << ',' << format_double(a);
    uni << '\n';
  }
  write_file_atomic(config.output("univariate.csv"), uni.str());

  std::ostringstream multi;
  multi << config.csv_preamble() << "# folds=" << config.folds
        << "\nclassifier,accuracy,correct,total,real_as_real,real_as_fake,fake_as_real,fake_as_fake\n";
  for (const auto& r : out.multivariate)
    multi << name(r.kind) << ',' << format_double(r.accuracy) << ',' << r.correct << ','
          << r.total << ',' << r.confusion[0][0] << ',' << r.confusion[0][1] << ','
          << r.confusion[1][0] << ',' << r.confusion[1][1] << '\n';
  write_file_atomic(config.output("multivariate.csv"), multi.str());

  write_json(config, "univariate.json", evaluate_json(config, data.feature_names, out, false));
  write_json(config, "multivariate.json", evaluate_json(config, data.feature_names, out, true));
  return out;
}

RelevanceOutcome relevance(const RunConfig& config, const learn::LabeledDataset& data,
                           std::ostream& log) {
  data.validate_for_training();
  RelevanceOutcome out;
  for (auto kind : config.classifiers) {
    out.rankings.push_back(
        learn::feature_relevance(data, config.spec(kind), config.folds, config.seed, config.workers));
    log << "relevance: " << name(kind) << " swept " << out.rankings.back().combination_count()
        << " subsets\n";
  }
  const std::size_t n = out.rankings.size();
  out.spearman.assign(n, std::vector<double>(n, 1.0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& ra = out.rankings[a].rank;
      const auto& rb = out.rankings[b].rank;
      const std::vector<double> x(ra.begin(), ra.end()), y(rb.begin(), rb.end());
      out.spearman[a][b] = out.spearman[b][a] = learn::spearman(x, y);
    }

  std::ostringstream table;
  table << config.csv_preamble() << "# folds=" << config.folds << "\nfeature";
  for (const auto& r : out.rankings) table << ",rho_" << name(r.kind) << ",rank_" << name(r.kind);
  table << '\n';
  for (std::size_t f = 0; f < data.feature_count(); ++f) {
    table << data.feature_names[f];
    for (const auto& r : out.rankings)
      table << ',' << format_double(r.prominence[f]) << ',' << r.rank[f];
    table << '\n';
  }
  write_file_atomic(config.output("relevance.csv"), table.str());

  for (const auto& r : out.rankings) {
    std::ostringstream subsets;
    subsets << config.csv_preamble() << "# classifier=" << name(r.kind)
            << "\nposition,mask,size,accuracy,features\n";
    for (std::size_t i = 0; i < r.ordered_subsets.size(); ++i) {
      const auto mask = r.ordered_subsets[i];
      std::string names;
      for (std::size_t f = 0; f < r.feature_count(); ++f)
        if (mask >> f & 1u) names += (names.empty() ? "" : "+") + r.feature_names[f];
      subsets << i + 1 << ',' << mask << ',' << std::popcount(mask) << ','
              << format_double(r.accuracy_by_mask[mask]) << ',' << names << '\n';
    }
    write_file_atomic(config.output("subsets_" + name(r.kind) + ".csv"), subsets.str());
  }

  std::ostringstream sp;
  sp << config.csv_preamble() << "classifier";
  for (const auto& r : out.rankings) sp << ',' << name(r.kind);
  sp << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    sp << name(out.rankings[a].kind);
    for (double v : out.spearman[a]) sp << ',' << format_double(v);
    sp << '\n';
  }
  write_file_atomic(config.output("spearman.csv"), sp.str());
  write_json(config, "relevance.json", relevance_json(config, out));
  return out;
}

PcaOutcome pca(const RunConfig& config, const learn::LabeledDataset& data, std::ostream& log) {
  data.validate();
  const auto scaler = learn::Standardizer::fit(data);
  for (auto f : scaler.dropped)
    log << "pca: dropping constant feature " << data.feature_names[f] << '\n';
  PcaOutcome out;
  out.pca = learn::pca_project(scaler.transform(data).rows, 2);
  out.ids = data.ids;
  out.labels = data.labels;

  std::ostringstream csv;
  csv << config.csv_preamble();
  for (std::size_t d = 0; d < out.pca.explained_variance_ratio.size(); ++d)
    csv << "# explained_variance_" << d + 1 << '='
        << format_double(out.pca.explained_variance_ratio[d]) << '\n';
  csv << "doc_id,class,x,y\n";
  for (std::size_t i = 0; i < out.ids.size(); ++i)
    csv << out.ids[i] << ',' << to_string(out.labels[i]) << ','
        << format_double(out.pca.coordinates[i][0]) << ','
        << format_double(out.pca.coordinates[i][1]) << '\n';
  write_file_atomic(config.output("pca.csv"), csv.str());
  write_json(config, "pca.json", pca_json(config, out));
  return out;
}

}  // namespace

GenerateOutcome cmd_generate(const RunConfig& config, std::ostream& log) {
  const auto grammar_path = config.resolve(config.generate.grammar);
  need_file(grammar_path, "grammar");
  const auto grammar = GibberishGrammar::load(grammar_path);
  GibberishCorpusOptions options;
  options.count = config.generate.count;
  options.min_words = config.generate.min_words;
  options.max_words = config.generate.max_words;
  const auto dir = config.resolve(config.generate.output_dir);
  const auto entries = write_gibberish_corpus(grammar, config.seed, dir, options);

  std::ostringstream manifest;
  manifest << config.csv_preamble() << "# id\tpath\tclass\n";
  for (const auto& e : entries)
    manifest << e.id << '\t' << e.path.generic_string() << '\t' << to_string(e.label) << '\n';
  GenerateOutcome out{dir / "manifest.tsv", entries.size()};
  write_file_atomic(out.manifest, manifest.str());
  log << "generate: wrote " << entries.size() << " documents to " << dir.string() << '\n';
  return out;
}

IngestOutcome cmd_ingest(const RunConfig& config, std::ostream& log) {
  const auto real_path = config.resolve(config.real_manifest);
  const auto fake_path = config.resolve(config.fake_manifest);
  const auto lexicon_dir = config.resolve(config.lexicon_dir);
  need_file(real_path, "real manifest");
  need_file(fake_path, "fake manifest");
  if (!std::filesystem::is_directory(lexicon_dir))
    throw ConfigError("lexicon directory not found: " + lexicon_dir.string());

  auto entries = manifest_for(real_path, Label::real);
  const auto fake = manifest_for(fake_path, Label::fake);
  entries.insert(entries.end(), fake.begin(), fake.end());
  std::set<std::string> ids;
  for (const auto& e : entries)
    if (!ids.insert(e.id).second) throw DataError("document id '" + e.id + "' appears in both manifests");

  const Lexicon lexicon = Lexicon::load_directory(lexicon_dir);
  IngestOptions options;
  options.extract.n_shuffles = config.n_shuffles;
  options.extract.min_nodes = config.min_nodes;
  options.workers = config.workers;
  const IngestResult result = ingest(entries, lexicon, config.seed, options);

  char checksum[17];
  std::snprintf(checksum, sizeof checksum, "%016llx",
                static_cast<unsigned long long>(lexicon.stopword_checksum));
  const std::vector<std::pair<std::string, std::string>> preamble = {
      {"config_hash", config.hash},
      {"seed", std::to_string(config.seed)},
      {"n_shuffles", std::to_string(config.n_shuffles)},
      {"stopword_checksum", checksum},
      {"documents", std::to_string(entries.size())},
      {"accepted", std::to_string(result.rows.size())},
      {"rejected", std::to_string(result.rejected.size())},
  };
  std::filesystem::create_directories(config.resolve(config.output_dir));
  write_file_atomic(config.output("features.csv"), feature_csv(result.rows, preamble));

  std::ostringstream rejected;
  rejected << config.csv_preamble() << "doc_id,reason\n";
  for (const auto& r : result.rejected) rejected << r.doc_id << ',' << csv_field(r.reason) << '\n';
  write_file_atomic(config.output("rejected.csv"), rejected.str());

  std::ostringstream lint;
  lint << config.csv_preamble() << "doc_id,letters,suspicious,suspicious_ratio\n";
  for (const auto& l : result.lint)
    lint << l.doc_id << ',' << l.report.letters << ',' << l.report.suspicious << ','
         << format_double(l.report.suspicious_ratio()) << '\n';
  write_file_atomic(config.output("lint.csv"), lint.str());

  for (const auto& r : result.rejected) log << "ingest: rejected " << r.doc_id << ": " << r.reason << '\n';
  log << "ingest: " << result.rows.size() << " accepted, " << result.rejected.size()
      << " rejected of " << entries.size() << '\n';
  if (result.rows.empty()) throw DataError("every document was rejected");
  return {entries.size(), result.rows.size(), result.rejected.size()};
}

learn::LabeledDataset load_feature_matrix(const RunConfig& config, std::ostream& log) {
  const auto path = config.output("features.csv");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("feature matrix not found (run ingest first): " + path.string());
  std::string first;
  std::getline(in, first);
  if (first != "# config_hash=" + config.hash)
    log << "warning: " << path.string() << " was produced with a different config\n";
  in.seekg(0);
  return learn::LabeledDataset::from_features(read_feature_csv(in));
}

EvaluateOutcome cmd_evaluate(const RunConfig& config, std::ostream& log) {
  return evaluate(config, load_feature_matrix(config, log), log);
}

RelevanceOutcome cmd_relevance(const RunConfig& config, std::ostream& log) {
  return relevance(config, load_feature_matrix(config, log), log);
}

PcaOutcome cmd_pca(const RunConfig& config, std::ostream& log) {
  return pca(config, load_feature_matrix(config, log), log);
}

void cmd_report(const RunConfig& config, std::ostream& log) {
  const auto data = load_feature_matrix(config, log);
  ordered_json bundle = stamp(config);
  bundle["config"] = ordered_json::parse(config_json(config));
  bundle["documents"] = data.size();

  const auto ev = evaluate(config, data, log);
  bundle["univariate"] = evaluate_json(config, data.feature_names, ev, false)["univariate"];
  bundle["multivariate"] = evaluate_json(config, data.feature_names, ev, true)["multivariate"];
  if (config.relevance) {
    const auto rel = relevance(config, data, log);
    const auto j = relevance_json(config, rel);
    bundle["relevance"] = j["rankings"];
    bundle["spearman"] = j["spearman"];
  }
  const auto p = pca(config, data, log);
  bundle["pca"] = pca_json(config, p);
  bundle["pca"].erase("config_hash");
  bundle["pca"].erase("seed");
  write_json(config, "report.json", bundle);
  log << "report: wrote " << config.output("report.json").string() << '\n';
}

}  // namespace textnet::cli
