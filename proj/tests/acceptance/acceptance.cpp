// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance [--data DIR] [--only N]...

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "graph_checks.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"
#include "textnet/corpus/grammar.hpp"
#include "textnet/corpus/lexicon.hpp"
#include "textnet/data.hpp"
#include "textnet/error.hpp"
#include "textnet/learn/evaluation.hpp"
#include "textnet/learn/pca.hpp"
#include "textnet/learn/relevance.hpp"
#include "textnet/learn/statistics.hpp"
#include "textnet/metrics.hpp"
#include "textnet/network.hpp"
#include "textnet/pipeline.hpp"

namespace {

using namespace textnet;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failed checks; the first few are kept for the report line.
struct Checks {
  std::size_t failed = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failed <= 3) notes.push_back(what);
  }
  Outcome outcome(std::string summary) const {
    for (const auto& n : notes) summary += "; " + n;
    if (failed > notes.size()) summary += "; +" + std::to_string(failed - notes.size()) + " more";
    return {failed == 0, summary};
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("textnet_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// ---------------------------------------------------------------------------
// 1. Metric oracle suite

Outcome metric_oracles() {
  const auto t0 = Clock::now();
  Rng rng(20240601);
  Checks checks;
  for (int g = 0; g < 200; ++g) {
    const auto net = oracle::random_graph(rng, 2, 12, /*no_isolated=*/true);
    for (const auto& p : oracle::compare_metrics(net, 1e-9))
      checks.expect(false, "graph " + std::to_string(g) + ": " + p);

    // Combinatorial quantities must agree exactly.
    const auto a = oracle::adjacency(net);
    const auto dist = oracle::floyd_warshall(a);
    std::size_t unreachable = 0;
    for (std::size_t i = 0; i < dist.size(); ++i)
      for (std::size_t j = 0; j < dist.size(); ++j) unreachable += i != j && dist[i][j] >= oracle::kInf;
    checks.expect(shortest_paths(net).unreachable_pairs == unreachable,
                  "graph " + std::to_string(g) + ": unreachable pair count");
    const auto deg = oracle::degrees(a);
    for (NodeId i = 0; i < net.node_count(); ++i)
      checks.expect(net.degree(i) == static_cast<std::size_t>(deg[i]), "degree mismatch");
  }
  const double secs = seconds_since(t0);
  checks.expect(secs < 60.0, "runtime " + fixed(secs, 1) + " s exceeds 60 s");
  return checks.outcome("200 random graphs (2-12 nodes), B, C, C_global, l, k_n, r, alpha h=1,2,3 vs "
                        "brute force; " + fixed(secs, 2) + " s");
}

// ---------------------------------------------------------------------------
// 2. Closed forms

Outcome closed_forms() {
  Checks checks;
  const auto c8 = accessibility(oracle::cycle(8), 2);
  double worst = 0.0;
  for (double v : c8.values) worst = std::max(worst, std::fabs(v - 2.0 * std::sqrt(2.0)));
  checks.expect(worst <= 1e-9, "C_8 alpha(2) off by " + std::to_string(worst));

  const auto s5 = assortativity(oracle::star(5));
  checks.expect(s5.defined && std::fabs(s5.r + 1.0) <= 1e-12,
                "S_5 assortativity " + format_double(s5.r));

  const auto b = betweenness(oracle::path(3)).values;
  checks.expect(b == std::vector<double>{0.0, 2.0, 0.0}, "P_3 betweenness not (0, 2, 0)");

  std::ostringstream d;
  d << "C_8 max |alpha(2) - 2 sqrt 2| = " << worst << ", S_5 r = " << format_double(s5.r)
    << ", P_3 B = (" << b[0] << ", " << b[1] << ", " << b[2] << ")";
  return checks.outcome(d.str());
}

// ---------------------------------------------------------------------------
// 3. Sally excerpt

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Outcome sally() {
  constexpr std::string_view text =
      "If Sally had been constantly in Bruce Carmyle's thoughts since they had parted on the "
      "Paris express, Mr. Carmyle had been very little in Sally's--so little, indeed, that she "
      "had had to search her memory for a moment before she identified him.";
  const auto& lexicon = Lexicon::bundled();
  Checks checks;

  const auto step_a = remove_stopwords(tokenize(text), lexicon);
  checks.expect(step_a == words("sally constantly bruce carmyle thoughts parted paris express "
                                "carmyle little sally little search memory moment before identified"),
                "step (a) tokens differ");
  const auto stream = lemmatize(step_a, lexicon, "sally");
  checks.expect(stream.lemmas == words("sally constant bruce carmyle think part paris express "
                                       "carmyle little sally little search memory moment before identify"),
                "step (b) lemmas differ");

  const auto net = build_network(stream);
  checks.expect(net.node_count() == 14 && net.edge_count() == 15,
                std::to_string(net.node_count()) + " nodes, " + std::to_string(net.edge_count()) + " edges");
  const std::set<std::pair<std::string, std::string>> fig2 = {
      {"constant", "sally"}, {"bruce", "constant"},  {"bruce", "carmyle"},  {"carmyle", "think"},
      {"part", "think"},     {"paris", "part"},      {"express", "paris"},  {"carmyle", "express"},
      {"carmyle", "little"}, {"little", "sally"},    {"little", "search"},  {"memory", "search"},
      {"memory", "moment"},  {"before", "moment"},   {"before", "identify"}};
  std::set<std::pair<std::string, std::string>> got;
  for (auto [i, j] : net.edges()) got.emplace(std::minmax(net.label(i), net.label(j)));
  checks.expect(got == fig2, "edge set differs from the hand-listed figure");
  return checks.outcome(std::to_string(step_a.size()) + " content tokens, " +
                        std::to_string(stream.lemmas.size()) + " lemmas, " +
                        std::to_string(net.node_count()) + " nodes, " +
                        std::to_string(net.edge_count()) + " edges");
}

// ---------------------------------------------------------------------------
// 4. Classifier sanity

/// 200 rows in 2-D; class real has x < -0.5, class fake has x > 0.5.
learn::LabeledDataset separable(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows;
  std::vector<Label> labels;
  for (int i = 0; i < 200; ++i) {
    const bool fake = i % 2 == 1;
    const double x = (0.5 + 2.0 * uniform_unit(rng)) * (fake ? 1.0 : -1.0);
    rows.push_back({x, 4.0 * uniform_unit(rng) - 2.0});
    labels.push_back(fake ? Label::fake : Label::real);
  }
  return learn::LabeledDataset::from_rows(std::move(rows), std::move(labels));
}

Outcome classifier_sanity() {
  Checks checks;
  std::string detail = "separable:";
  const auto data = separable(1);
  for (auto kind : learn::kAllClassifiers) {
    const auto r = learn::cross_validate(data, {kind}, 10, 7);
    checks.expect(r.accuracy == 1.0, std::string(learn::to_string(kind)) + " separable accuracy " +
                                         format_double(r.accuracy));
    detail += " " + std::string(learn::to_string(kind)) + "=" + fixed(r.accuracy, 2);
  }

  // Label-shuffled: at least 19 of the 20 seeds (95%) must land in [0.40, 0.60].
  detail += "; shuffled labels, runs in [0.40,0.60] of 20:";
  for (auto kind : learn::kAllClassifiers) {
    std::size_t inside = 0;
    double sum = 0.0, lo = 1.0, hi = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto d = separable(1000 + seed);
      Rng rng(derive_seed(seed, 99));
      for (std::size_t i = d.labels.size(); i > 1; --i)
        std::swap(d.labels[i - 1], d.labels[uniform_index(rng, i)]);
      const double acc = learn::cross_validate(d, {kind}, 10, seed).accuracy;
      inside += acc >= 0.40 && acc <= 0.60;
      sum += acc;
      lo = std::min(lo, acc);
      hi = std::max(hi, acc);
    }
    checks.expect(inside >= 19, std::string(learn::to_string(kind)) + " only " +
                                    std::to_string(inside) + "/20 shuffled runs in band");
    detail += " " + std::string(learn::to_string(kind)) + "=" + std::to_string(inside) + " (mean " +
              fixed(sum / 20) + ", range " + fixed(lo) + "-" + fixed(hi) + ")";
  }
  return checks.outcome(detail);
}

// ---------------------------------------------------------------------------
// 5. Real prose vs generated gibberish

struct ProseCorpus {
  learn::LabeledDataset data;
  std::size_t documents = 0;
  std::size_t rejected = 0;
  std::size_t min_words = 0;
  double ingest_seconds = 0.0;
};

const ProseCorpus& prose_corpus() {
  static const ProseCorpus corpus = [] {
    const auto t0 = Clock::now();
    ProseCorpus c;
    auto entries = read_manifest(data_dir() / "corpus" / "real" / "manifest.tsv");
    if (entries.size() < 60) throw DataError("bundled real corpus has fewer than 60 excerpts");
    entries.resize(60);
    const auto dir = scratch("gibberish");
    auto fake = write_gibberish_corpus(GibberishGrammar::bundled(), 2024, dir);
    for (auto& e : fake) e.path = dir / e.path;
    entries.insert(entries.end(), fake.begin(), fake.end());

    c.min_words = std::numeric_limits<std::size_t>::max();
    for (const auto& e : entries) c.min_words = std::min(c.min_words, count_words(read_file(e.path)));
    const auto result = ingest(entries, Lexicon::bundled(), 42);
    c.documents = entries.size();
    c.rejected = result.rejected.size();
    c.data = learn::LabeledDataset::from_features(result.rows);
    c.ingest_seconds = seconds_since(t0);
    fs::remove_all(dir);
    return c;
  }();
  return corpus;
}

Outcome prose_vs_gibberish() {
  const auto t0 = Clock::now();
  const auto& c = prose_corpus();
  Checks checks;
  const auto counts = c.data.class_counts();
  checks.expect(c.rejected == 0, std::to_string(c.rejected) + " documents rejected");
  checks.expect(counts[0] == 60 && counts[1] == 60, "class counts are not 60/60");
  checks.expect(c.min_words >= 1000, "shortest document has " + std::to_string(c.min_words) + " words");

  double best_multi = 0.0;
  std::string detail = "60 real + 60 generated, shortest " + std::to_string(c.min_words) + " words;";
  for (auto kind : learn::kAllClassifiers) {
    const double multi = learn::cross_validate(c.data, {kind}, 10, 42).accuracy;
    double best_uni = 0.0;
    for (std::size_t f = 0; f < c.data.feature_count(); ++f) {
      const std::size_t cols[1] = {f};
      best_uni = std::max(best_uni, learn::cross_validate(c.data, {kind}, 10, 42, cols).accuracy);
    }
    best_multi = std::max(best_multi, multi);
    checks.expect(multi >= best_uni - 0.02, std::string(learn::to_string(kind)) + " multivariate " +
                                                fixed(multi) + " < best univariate " + fixed(best_uni) +
                                                " - 0.02");
    detail += " " + std::string(learn::to_string(kind)) + " multi " + fixed(multi) + " / best uni " +
              fixed(best_uni) + ";";
  }
  checks.expect(best_multi >= 0.85, "best accuracy " + fixed(best_multi) + " < 0.85");
  const double secs = c.ingest_seconds + seconds_since(t0);
  checks.expect(secs < 600.0, "runtime " + fixed(secs, 1) + " s exceeds 10 min");
  return checks.outcome(detail + " " + fixed(secs, 1) + " s");
}

// ---------------------------------------------------------------------------
// 6. Relevance machinery

Outcome relevance_machinery() {
  Checks checks;
  const auto t0 = Clock::now();
  const auto& c = prose_corpus();
  const auto sweep = learn::feature_relevance(c.data, {learn::ClassifierKind::knn}, 10, 42);
  const double sweep_secs = seconds_since(t0);
  checks.expect(sweep.combination_count() == 8191, "sweep covered " +
                                                       std::to_string(sweep.combination_count()) + " subsets");
  checks.expect(sweep_secs < 1800.0, "kNN sweep took " + fixed(sweep_secs, 1) + " s");

  std::vector<double> shifts(kFeatureCount, 0.0);
  shifts[0] = shifts[1] = shifts[2] = 2.5;
  const auto synth = synthetic::shifted_blobs(17, 50, shifts);
  std::size_t agreeing = 0;
  for (auto kind : learn::kAllClassifiers) {
    const auto r = learn::feature_relevance(synth, {kind}, 10, 3);
    agreeing += r.rank[0] <= 3 && r.rank[1] <= 3 && r.rank[2] <= 3;
  }
  checks.expect(agreeing >= 2, "informative features on top for " + std::to_string(agreeing) + "/3");

  // Hand evaluation of the discrete sum on a fixed 3-feature table. Subset
  // order (best first): {0,1} {0,1,2} {0,2} {0} {1,2} {1} {2}.
  const std::vector<double> table = {0.0, 0.70, 0.60, 0.90, 0.50, 0.80, 0.65, 0.85};
  const auto hand = learn::relevance_from_accuracies(table, {"a", "b", "c"}, learn::ClassifierKind::knn);
  checks.expect(hand.prominence == std::vector<double>{20.0, 16.0, 13.0}, "hand table rho differs");

  return checks.outcome("kNN sweep of " + std::to_string(sweep.combination_count()) + " subsets in " +
                        fixed(sweep_secs, 1) + " s; informative top-3 for " + std::to_string(agreeing) +
                        "/3 classifiers; hand-table rho = (" + format_double(hand.prominence[0]) + ", " +
                        format_double(hand.prominence[1]) + ", " + format_double(hand.prominence[2]) + ")");
}

// ---------------------------------------------------------------------------
// 7. Statistical utilities

Outcome statistics() {
  Checks checks;
  const std::vector<double> a = {3, 11, 1, 7, 13, 2, 9, 5, 12, 4, 10, 6, 8};
  std::vector<double> rev(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rev[i] = 14.0 - a[i];
  const double same = learn::spearman(a, a);
  const double opposite = learn::spearman(a, rev);
  checks.expect(std::fabs(same - 1.0) <= 1e-12, "identical rankings give " + format_double(same));
  checks.expect(std::fabs(opposite + 1.0) <= 1e-12, "reversed rankings give " + format_double(opposite));

  // Rank-1 data: every row is a multiple of one direction.
  Rng rng(5);
  std::vector<double> dir(kFeatureCount);
  for (auto& d : dir) d = synthetic::gaussian(rng);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 50; ++i) {
    const double t = synthetic::gaussian(rng);
    std::vector<double> r(kFeatureCount);
    for (std::size_t j = 0; j < kFeatureCount; ++j) r[j] = t * dir[j];
    rows.push_back(r);
  }
  const auto p = learn::pca_project(rows, 2);
  checks.expect(std::fabs(p.explained_variance_ratio[0] - 1.0) <= 1e-9,
                "first component explains " + format_double(p.explained_variance_ratio[0]));
  return checks.outcome("spearman(a, a) = " + format_double(same) + ", spearman(a, reversed) = " +
                        format_double(opposite) + ", rank-1 PCA first ratio = " +
                        format_double(p.explained_variance_ratio[0]));
}

// ---------------------------------------------------------------------------
// 8. Determinism

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file() && e.path().filename() != "run.json")
      files[fs::relative(e.path(), root).generic_string()] = read_file(e.path());
  return files;
}

Outcome determinism() {
  const auto t0 = Clock::now();
  std::map<std::string, std::string> runs[2];
  std::ostringstream log;
  const std::string config_text = cli::config_template();
  for (int i = 0; i < 2; ++i) {
    const auto dir = scratch("determinism_" + std::to_string(i));
    write_file_atomic(dir / "run.json", config_text);
    const auto config = cli::load_config(dir / "run.json");
    cli::cmd_generate(config, log);
    cli::cmd_ingest(config, log);
    cli::cmd_report(config, log);
    runs[i] = snapshot(dir);
    fs::remove_all(dir);
  }
  Checks checks;
  checks.expect(runs[0].size() == runs[1].size(), "runs wrote different file sets");
  std::size_t artifacts = 0;
  for (const auto& [name, bytes] : runs[0]) {
    const auto other = runs[1].find(name);
    checks.expect(other != runs[1].end() && other->second == bytes, name + " differs");
    artifacts += name.starts_with("out/");
  }
  checks.expect(runs[0].contains("out/features.csv") && runs[0].contains("out/report.json"),
                "feature matrix or report missing");
  return checks.outcome("generate + ingest + report twice: " + std::to_string(runs[0].size()) +
                        " files (" + std::to_string(artifacts) + " report artifacts) byte-identical; " +
                        fixed(seconds_since(t0), 1) + " s");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string data;
  std::vector<int> only;
  app.add_option("--data", data, "Bundled data directory");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);
  if (!data.empty()) setenv("TEXTNET_DATA_DIR", data.c_str(), 1);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"metric oracle suite", metric_oracles},
      {"closed-form checks", closed_forms},
      {"Sally end-to-end", sally},
      {"classifier sanity", classifier_sanity},
      {"real prose vs gibberish", prose_vs_gibberish},
      {"relevance machinery", relevance_machinery},
      {"statistical utilities", statistics},
      {"determinism", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
