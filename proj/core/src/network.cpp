#include "textnet/network.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "textnet/error.hpp"
#include "textnet/rng.hpp"

namespace textnet {

WordNetwork WordNetwork::from_edges(std::size_t node_count,
                                    const std::vector<std::pair<NodeId, NodeId>>& edges,
                                    std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != node_count) throw DataError("label count does not match node count");

  std::vector<std::vector<NodeId>> adj(node_count);
  for (auto [a, b] : edges) {
    if (a >= node_count || b >= node_count) throw DataError("edge endpoint out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  WordNetwork net;
  net.labels_ = std::move(labels);
  net.offsets_.assign(node_count + 1, 0);
  std::size_t directed = 0;
  for (std::size_t i = 0; i < node_count; ++i) {
    auto& list = adj[i];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    directed += list.size();
    net.offsets_[i + 1] = directed;
  }
  net.targets_.reserve(directed);
  for (const auto& list : adj) net.targets_.insert(net.targets_.end(), list.begin(), list.end());
  net.edge_count_ = directed / 2;
  return net;
}

bool WordNetwork::adjacent(NodeId i, NodeId j) const noexcept {
  const auto n = neighbors(i);
  return std::binary_search(n.begin(), n.end(), j);
}

std::vector<std::pair<NodeId, NodeId>> WordNetwork::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId i = 0; i < node_count(); ++i) {
    for (NodeId j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

WordNetwork build_network(const TokenStream& stream) {
  if (stream.lemmas.size() < 2) {
    throw DataError("network too small: document '" + stream.doc_id + "' has " +
                    std::to_string(stream.lemmas.size()) + " lemma(s), need at least 2");
  }
  std::unordered_map<std::string_view, NodeId> index;
  std::vector<std::string> labels;
  std::vector<NodeId> sequence;
  sequence.reserve(stream.lemmas.size());
  for (const auto& lemma : stream.lemmas) {
    auto [it, inserted] = index.try_emplace(lemma, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(lemma);
    sequence.push_back(it->second);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(sequence.size() - 1);
  for (std::size_t t = 1; t < sequence.size(); ++t) edges.emplace_back(sequence[t - 1], sequence[t]);
  const std::size_t n = labels.size();
  return WordNetwork::from_edges(n, edges, std::move(labels));
}

TokenStream shuffle_stream(const TokenStream& stream, std::uint64_t seed) {
  TokenStream out = stream;
  Rng rng(seed);
  auto& v = out.lemmas;
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(v[i - 1], v[j]);
  }
  return out;
}

void write_edge_list(const WordNetwork& net, std::ostream& out) {
  for (auto [i, j] : net.edges()) out << net.label(i) << '\t' << net.label(j) << '\n';
}

}  // namespace textnet
