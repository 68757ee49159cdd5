#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "textnet/corpus/document.hpp"

namespace textnet {

using NodeId = std::uint32_t;

/// Undirected, unweighted simple graph stored as sorted adjacency lists.
/// Immutable after construction.
class WordNetwork {
 public:
  WordNetwork() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse and
  /// self-loops are ignored. Labels default to the node index.
  static WordNetwork from_edges(std::size_t node_count,
                                const std::vector<std::pair<NodeId, NodeId>>& edges,
                                std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId i) const { return labels_.at(i); }

  std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::size_t degree(NodeId i) const noexcept { return offsets_[i + 1] - offsets_[i]; }
  bool adjacent(NodeId i, NodeId j) const noexcept;

  /// Each undirected edge once, with first < second, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::size_t edge_count_ = 0;
};

/// One node per distinct lemma (numbered in order of first appearance) and
/// an edge between every pair of lemmas that occur next to each other.
/// Throws DataError for streams shorter than two lemmas.
WordNetwork build_network(const TokenStream& stream);

/// Seeded Fisher-Yates permutation of the lemmas; frequencies are preserved.
TokenStream shuffle_stream(const TokenStream& stream, std::uint64_t seed);

/// "label_i<TAB>label_j" per edge.
void write_edge_list(const WordNetwork& net, std::ostream& out);

}  // namespace textnet
