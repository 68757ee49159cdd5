#include "textnet/features.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "textnet/error.hpp"
#include "textnet/metrics.hpp"
#include "textnet/rng.hpp"

namespace textnet {

const std::array<std::string_view, kFeatureCount>& feature_names() noexcept {
  static constexpr std::array<std::string_view, kFeatureCount> names = {
      "accessibility_h2_mean", "accessibility_h2_dev", "accessibility_h3_mean",
      "accessibility_h3_dev",  "neighbor_degree_mean", "neighbor_degree_dev",
      "betweenness_mean",      "betweenness_dev",      "clustering_mean",
      "clustering_dev",        "assortativity",        "shortest_path_mean",
      "shortest_path_dev"};
  return names;
}

namespace {

void put(FeatureArray& values, Feature mean, Feature dev, const Summary& s) {
  values[static_cast<std::size_t>(mean)] = s.mean;
  values[static_cast<std::size_t>(dev)] = s.deviation;
}

}  // namespace

RawFeatures raw_features(const WordNetwork& net) {
  RawFeatures raw;
  auto& v = raw.values;
  put(v, Feature::accessibility_h2_mean, Feature::accessibility_h2_dev,
      summarize(accessibility(net, 2)));
  put(v, Feature::accessibility_h3_mean, Feature::accessibility_h3_dev,
      summarize(accessibility(net, 3)));
  put(v, Feature::neighbor_degree_mean, Feature::neighbor_degree_dev,
      summarize(avg_neighbor_degree(net)));
  const PathMetrics paths = path_metrics(net);
  put(v, Feature::betweenness_mean, Feature::betweenness_dev, summarize(paths.betweenness));
  put(v, Feature::clustering_mean, Feature::clustering_dev, summarize(clustering_local(net)));
  const Assortativity r = assortativity(net);
  v[static_cast<std::size_t>(Feature::assortativity)] = r.r;
  raw.assortativity_defined = r.defined;
  put(v, Feature::shortest_path_mean, Feature::shortest_path_dev,
      summarize(paths.paths.per_node));
  return raw;
}

FeatureExtraction extract_features(const TokenStream& stream, std::uint64_t seed,
                                   const ExtractOptions& options) {
  if (options.n_shuffles == 0) throw DataError("n_shuffles must be at least 1");
  const WordNetwork net = build_network(stream);
  if (net.node_count() < options.min_nodes) {
    throw DataError("network too small: " + std::to_string(net.node_count()) +
                    " distinct lemmas, need at least " + std::to_string(options.min_nodes));
  }
  FeatureExtraction out;
  out.raw = raw_features(net).values;

  FeatureArray sum{};
  FeatureArray sum_sq{};
  for (std::size_t k = 0; k < options.n_shuffles; ++k) {
    const auto shuffled = build_network(shuffle_stream(stream, derive_seed(seed, k + 1)));
    const auto baseline = raw_features(shuffled).values;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      sum[f] += baseline[f];
      sum_sq[f] += baseline[f] * baseline[f];
    }
  }
  const double count = static_cast<double>(options.n_shuffles);
  out.features.doc_id = stream.doc_id;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const double mean = sum[f] / count;
    out.baseline_mean[f] = mean;
    out.baseline_stddev[f] = std::sqrt(std::max(0.0, sum_sq[f] / count - mean * mean));
    if (mean == 0.0 || !std::isfinite(mean)) {
      throw DataError("degenerate normalization: randomized average of " +
                      std::string(feature_names()[f]) + " is zero");
    }
    out.features.values[f] = out.raw[f] / mean;
    if (!std::isfinite(out.features.values[f])) {
      throw DataError("non-finite value for " + std::string(feature_names()[f]));
    }
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

void write_feature_csv(std::ostream& out, const std::vector<FeatureVector>& rows,
                       const std::vector<std::pair<std::string, std::string>>& preamble) {
  for (const auto& [key, value] : preamble) out << "# " << key << '=' << value << '\n';
  out << "doc_id,class";
  for (auto name : feature_names()) out << ',' << name;
  out << '\n';
  for (const auto& row : rows) {
    out << row.doc_id << ',' << (row.label ? to_string(*row.label) : "");
    for (double v : row.values) out << ',' << format_double(v);
    out << '\n';
  }
}

std::string feature_csv(const std::vector<FeatureVector>& rows,
                        const std::vector<std::pair<std::string, std::string>>& preamble) {
  std::ostringstream out;
  write_feature_csv(out, rows, preamble);
  return out.str();
}

std::vector<FeatureVector> read_feature_csv(std::istream& in) {
  std::vector<FeatureVector> rows;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (!header_seen) {
      header_seen = true;
      bool ok = cells.size() == kFeatureCount + 2 && cells[0] == "doc_id" && cells[1] == "class";
      for (std::size_t f = 0; ok && f < kFeatureCount; ++f) ok = cells[f + 2] == feature_names()[f];
      if (!ok) throw DataError("feature CSV header does not match the expected columns");
      continue;
    }
    if (cells.size() != kFeatureCount + 2) {
      throw DataError("feature CSV line " + std::to_string(line_no) + ": expected " +
                      std::to_string(kFeatureCount + 2) + " cells");
    }
    FeatureVector row;
    row.doc_id = cells[0];
    if (!cells[1].empty()) row.label = parse_label(cells[1]);
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      const auto& c = cells[f + 2];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc{} || ptr != c.data() + c.size() || !std::isfinite(v)) {
        throw DataError("feature CSV line " + std::to_string(line_no) + ": bad number '" + c + "'");
      }
      row.values[f] = v;
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw DataError("feature CSV has no header");
  return rows;
}

}  // namespace textnet
