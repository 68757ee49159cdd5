#include "cli/config.hpp"

#include <cstdio>
#include <set>

#include "json.hpp"
#include "textnet/corpus/document.hpp"
#include "textnet/data.hpp"
#include "textnet/error.hpp"
#include "textnet/rng.hpp"

namespace textnet::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kDataPrefix = "${data}";

json to_json(const RunConfig& c) {
  json classifiers = json::array();
  for (auto k : c.classifiers) classifiers.push_back(std::string(learn::to_string(k)));
  return json{
      {"corpus", {{"real", c.real_manifest.generic_string()}, {"fake", c.fake_manifest.generic_string()}}},
      {"lexicon", c.lexicon_dir.generic_string()},
      {"seed", c.seed},
      {"features", {{"n_shuffles", c.n_shuffles}, {"min_nodes", c.min_nodes}}},
      {"classifiers", classifiers},
      {"knn", {{"k", c.knn_k}}},
      {"nbayes", {{"bandwidth_scale", c.bandwidth_scale}}},
      {"c45", {{"max_depth", c.max_depth}, {"min_leaf", c.min_leaf}}},
      {"folds", c.folds},
      {"relevance", c.relevance},
      {"output_dir", c.output_dir.generic_string()},
      {"workers", c.workers},
      {"generate",
       {{"grammar", c.generate.grammar.generic_string()},
        {"count", c.generate.count},
        {"min_words", c.generate.min_words},
        {"max_words", c.generate.max_words},
        {"output_dir", c.generate.output_dir.generic_string()}}},
  };
}

// Rejects keys the reader does not know, so typos fail loudly.
void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  const std::set<std::string_view> known(allowed);
  for (const auto& [key, _] : obj.items())
    if (!known.contains(key)) throw ConfigError("unknown config key '" + where + key + "'");
}

template <typename T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + where + key + "' has the wrong type");
  }
}

void read_path(const json& obj, const char* key, std::filesystem::path& out,
               const std::string& where) {
  std::string s = out.generic_string();
  read(obj, key, s, where);
  out = s;
}

void read_count(const json& obj, const char* key, std::size_t& out, const std::string& where) {
  if (obj.contains(key) && !obj.at(key).is_number_unsigned())
    throw ConfigError("config key '" + where + key + "' must be a non-negative integer");
  read(obj, key, out, where);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::filesystem::path RunConfig::resolve(const std::filesystem::path& p) const {
  const std::string s = p.generic_string();
  if (s.starts_with(kDataPrefix)) {
    std::string rest = s.substr(kDataPrefix.size());
    while (!rest.empty() && rest.front() == '/') rest.erase(0, 1);
    return data_dir() / rest;
  }
  if (p.is_absolute()) return p;
  return base_dir / p;
}

learn::ClassifierSpec RunConfig::spec(learn::ClassifierKind kind) const {
  learn::ClassifierSpec s;
  s.kind = kind;
  s.k = knn_k;
  s.bandwidth_scale = bandwidth_scale;
  s.max_depth = max_depth;
  s.min_leaf = min_leaf;
  return s;
}

std::string RunConfig::csv_preamble() const {
  return "# config_hash=" + hash + "\n# seed=" + std::to_string(seed) + "\n";
}

RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(root,
             {"corpus", "lexicon", "seed", "features", "classifiers", "knn", "nbayes", "c45",
              "folds", "relevance", "output_dir", "workers", "generate"},
             "");

  RunConfig c;
  c.base_dir = base_dir;
  if (root.contains("corpus")) {
    const json& corpus = root.at("corpus");
    check_keys(corpus, {"real", "fake"}, "corpus.");
    read_path(corpus, "real", c.real_manifest, "corpus.");
    read_path(corpus, "fake", c.fake_manifest, "corpus.");
  }
  read_path(root, "lexicon", c.lexicon_dir, "");
  if (root.contains("seed") && !root.at("seed").is_number_unsigned())
    throw ConfigError("config key 'seed' must be a non-negative integer");
  read(root, "seed", c.seed, "");
  if (root.contains("features")) {
    const json& f = root.at("features");
    check_keys(f, {"n_shuffles", "min_nodes"}, "features.");
    read_count(f, "n_shuffles", c.n_shuffles, "features.");
    read_count(f, "min_nodes", c.min_nodes, "features.");
  }
  if (root.contains("classifiers")) {
    std::vector<std::string> names;
    read(root, "classifiers", names, "");
    c.classifiers.clear();
    for (const auto& n : names) {
      try {
        c.classifiers.push_back(learn::parse_classifier(n));
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (root.contains("knn")) {
    check_keys(root.at("knn"), {"k"}, "knn.");
    read_count(root.at("knn"), "k", c.knn_k, "knn.");
  }
  if (root.contains("nbayes")) {
    check_keys(root.at("nbayes"), {"bandwidth_scale"}, "nbayes.");
    read(root.at("nbayes"), "bandwidth_scale", c.bandwidth_scale, "nbayes.");
  }
  if (root.contains("c45")) {
    check_keys(root.at("c45"), {"max_depth", "min_leaf"}, "c45.");
    read_count(root.at("c45"), "max_depth", c.max_depth, "c45.");
    read_count(root.at("c45"), "min_leaf", c.min_leaf, "c45.");
  }
  read_count(root, "folds", c.folds, "");
  read(root, "relevance", c.relevance, "");
  read_path(root, "output_dir", c.output_dir, "");
  read_count(root, "workers", c.workers, "");
  if (root.contains("generate")) {
    const json& g = root.at("generate");
    check_keys(g, {"grammar", "count", "min_words", "max_words", "output_dir"}, "generate.");
    read_path(g, "grammar", c.generate.grammar, "generate.");
    read_count(g, "count", c.generate.count, "generate.");
    read_count(g, "min_words", c.generate.min_words, "generate.");
    read_count(g, "max_words", c.generate.max_words, "generate.");
    read_path(g, "output_dir", c.generate.output_dir, "generate.");
  }

  require(c.n_shuffles >= 1, "features.n_shuffles must be at least 1");
  require(c.min_nodes >= 2, "features.min_nodes must be at least 2");
  require(!c.classifiers.empty(), "classifiers must list at least one of knn, nbayes, c45");
  require(std::set(c.classifiers.begin(), c.classifiers.end()).size() == c.classifiers.size(),
          "classifiers must not repeat");
  require(c.knn_k >= 1, "knn.k must be at least 1");
  require(c.bandwidth_scale > 0.0, "nbayes.bandwidth_scale must be positive");
  require(c.max_depth >= 1, "c45.max_depth must be at least 1");
  require(c.min_leaf >= 1, "c45.min_leaf must be at least 1");
  require(c.folds >= 2, "folds must be at least 2");
  require(!c.output_dir.empty(), "output_dir must not be empty");
  require(c.generate.count >= 1, "generate.count must be at least 1");

  json canonical = to_json(c);
  canonical.erase("workers");  // scheduling only; results never depend on it
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical.dump())));
  c.hash = hex;
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const DataError&) {
    throw ConfigError("cannot read config file " + path.string());
  }
  return parse_config(text, path.parent_path().empty() ? "." : path.parent_path());
}

std::string config_json(const RunConfig& config) { return to_json(config).dump(2) + "\n"; }

std::string config_template() { return config_json(RunConfig{}); }

}  // namespace textnet::cli
