#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "textnet/network.hpp"

namespace textnet {

enum class NodeMetric : unsigned char {
  avg_neighbor_degree,
  clustering,
  accessibility_h2,
  accessibility_h3,
  shortest_path,
  betweenness,
};

std::string_view to_string(NodeMetric metric) noexcept;

/// One value per node. Nodes where the measurement is meaningless (isolated
/// nodes for k_n, singleton components for l) carry defined[i] == false and
/// are excluded from summaries.
struct NodeMetricVector {
  NodeMetric metric;
  std::vector<double> values;
  std::vector<bool> defined;

  std::size_t defined_count() const noexcept;
};

/// k_n(i) = sum_j a_ij k(j) / k(i). Isolated nodes get 0 and are flagged undefined.
NodeMetricVector avg_neighbor_degree(const WordNetwork& net);

/// C(i) = (edges among neighbours of i) / (k(i)(k(i)-1)/2), 0 when k(i) < 2.
NodeMetricVector clustering_local(const WordNetwork& net);

/// 3 * triangles / connected triples; 0 when the graph has no connected triple.
double clustering_global(const WordNetwork& net);

/// Row `source` of T^h with T_uv = a_uv / k(u): the probability that an
/// h-step random walk from `source` ends at each node. Throws DataError
/// for an isolated source or h == 0.
std::vector<double> walk_distribution(const WordNetwork& net, NodeId source, unsigned h);

/// alpha^(h)(i) = exp(-sum_j p_ij ln p_ij), with 0 ln 0 = 0. Always in [1, n].
/// Throws DataError if any node is isolated.
NodeMetricVector accessibility(const WordNetwork& net, unsigned h);

struct ShortestPathStats {
  /// l(i): mean BFS distance from i to every other node it can reach.
  NodeMetricVector per_node;
  /// Mean of l(i) over nodes where it is defined.
  double mean = 0.0;
  /// Ordered pairs (i, j), i != j, with no path between them.
  std::size_t unreachable_pairs = 0;
};

ShortestPathStats shortest_paths(const WordNetwork& net);

/// B(m) = sum over ordered pairs (s, t), s != m != t, of the fraction of
/// shortest s-t paths through m (Brandes accumulation). Pairs in different
/// components contribute nothing.
NodeMetricVector betweenness(const WordNetwork& net);

/// Shortest-path distances and betweenness from a single BFS sweep.
struct PathMetrics {
  ShortestPathStats paths;
  NodeMetricVector betweenness;
};
PathMetrics path_metrics(const WordNetwork& net);

struct Assortativity {
  double r = 0.0;
  /// false when there are fewer than two edges or the endpoint degree
  /// variance is zero (e.g. regular graphs); r is then reported as 0.
  bool defined = false;
};

/// Degree-degree Pearson correlation over edges (Newman's edge form).
Assortativity assortativity(const WordNetwork& net);

struct Summary {
  double mean = 0.0;
  double deviation = 0.0;  // population standard deviation
};

/// Mean and population standard deviation over the defined values.
/// Throws DataError with fewer than two defined values.
Summary summarize(const NodeMetricVector& values);

}  // namespace textnet
