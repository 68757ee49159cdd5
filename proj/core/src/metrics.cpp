#include "textnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "textnet/error.hpp"

namespace textnet {

std::string_view to_string(NodeMetric metric) noexcept {
  switch (metric) {
    case NodeMetric::avg_neighbor_degree: return "avg_neighbor_degree";
    case NodeMetric::clustering: return "clustering";
    case NodeMetric::accessibility_h2: return "accessibility_h2";
    case NodeMetric::accessibility_h3: return "accessibility_h3";
    case NodeMetric::shortest_path: return "shortest_path";
    case NodeMetric::betweenness: return "betweenness";
  }
  return "unknown";
}

std::size_t NodeMetricVector::defined_count() const noexcept {
  return static_cast<std::size_t>(std::count(defined.begin(), defined.end(), true));
}

NodeMetricVector avg_neighbor_degree(const WordNetwork& net) {
  const std::size_t n = net.node_count();
  NodeMetricVector out{NodeMetric::avg_neighbor_degree, std::vector<double>(n, 0.0),
                       std::vector<bool>(n, false)};
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t k = net.degree(i);
    if (k == 0) continue;
    std::size_t sum = 0;
    for (NodeId j : net.neighbors(i)) sum += net.degree(j);
    out.values[i] = static_cast<double>(sum) / static_cast<double>(k);
    out.defined[i] = true;
  }
  return out;
}

namespace {

// Number of edges among the neighbours of each node (twice the triangles at i).
std::vector<std::size_t> neighbour_links(const WordNetwork& net) {
  const std::size_t n = net.node_count();
  std::vector<std::size_t> links(n, 0);
  std::vector<char> mark(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    const auto nbrs = net.neighbors(i);
    if (nbrs.size() < 2) continue;
    for (NodeId j : nbrs) mark[j] = 1;
    std::size_t twice = 0;
    for (NodeId j : nbrs) {
      for (NodeId k : net.neighbors(j)) twice += mark[k];
    }
    for (NodeId j : nbrs) mark[j] = 0;
    links[i] = twice / 2;
  }
  return links;
}

}  // namespace

NodeMetricVector clustering_local(const WordNetwork& net) {
  const std::size_t n = net.node_count();
  NodeMetricVector out{NodeMetric::clustering, std::vector<double>(n, 0.0),
                       std::vector<bool>(n, true)};
  const auto links = neighbour_links(net);
  for (NodeId i = 0; i < n; ++i) {
    const double k = static_cast<double>(net.degree(i));
    if (k >= 2.0) out.values[i] = static_cast<double>(links[i]) / (k * (k - 1.0) / 2.0);
  }
  return out;
}

double clustering_global(const WordNetwork& net) {
  const auto links = neighbour_links(net);
  std::size_t closed = 0;
  std::size_t triples = 0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    const std::size_t k = net.degree(i);
    closed += links[i];
    triples += k * (k - (k > 0 ? 1 : 0)) / 2;
  }
  return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

namespace {

// Propagates probability mass one walk step. `support` lists the nonzero
// entries of `from`; on return `to` and `next_support` describe the result.
void walk_step(const WordNetwork& net, const std::vector<double>& from,
               const std::vector<NodeId>& support, std::vector<double>& to,
               std::vector<NodeId>& next_support, std::vector<char>& seen) {
  next_support.clear();
  for (NodeId u : support) {
    const double share = from[u] / static_cast<double>(net.degree(u));
    for (NodeId v : net.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        to[v] = 0.0;
        next_support.push_back(v);
      }
      to[v] += share;
    }
  }
  for (NodeId v : next_support) seen[v] = 0;
}

double entropy(const std::vector<double>& p, const std::vector<NodeId>& support) {
  double h = 0.0;
  for (NodeId v : support) {
    if (p[v] > 0.0) h -= p[v] * std::log(p[v]);
  }
  return h;
}

// Workspace for repeated walks from different sources.
class Walker {
 public:
  explicit Walker(const WordNetwork& net)
      : net_(net), a_(net.node_count(), 0.0), b_(net.node_count(), 0.0), seen_(net.node_count(), 0) {}

  // Runs `h` steps from `source`; returns the final distribution in `a_`
  // restricted to `support_a_`. `on_step` sees every intermediate step.
  template <typename OnStep>
  void run(NodeId source, unsigned h, OnStep&& on_step) {
    if (net_.degree(source) == 0) {
      throw DataError("random walk from isolated node '" + net_.label(source) + "'");
    }
    support_a_.assign(1, source);
    a_[source] = 1.0;
    for (unsigned step = 1; step <= h; ++step) {
      walk_step(net_, a_, support_a_, b_, support_b_, seen_);
      std::swap(a_, b_);
      std::swap(support_a_, support_b_);
      on_step(step, a_, support_a_);
    }
  }

 private:
  const WordNetwork& net_;
  std::vector<double> a_, b_;
  std::vector<NodeId> support_a_, support_b_;
  std::vector<char> seen_;
};

}  // namespace

std::vector<double> walk_distribution(const WordNetwork& net, NodeId source, unsigned h) {
  if (h == 0) throw DataError("walk length must be at least 1");
  if (source >= net.node_count()) throw DataError("walk source out of range");
  std::vector<double> result(net.node_count(), 0.0);
  Walker walker(net);
  walker.run(source, h, [&](unsigned step, const std::vector<double>& p,
                            const std::vector<NodeId>& support) {
    if (step == h) {
      for (NodeId v : support) result[v] = p[v];
    }
  });
  return result;
}

NodeMetricVector accessibility(const WordNetwork& net, unsigned h) {
  if (h == 0) throw DataError("walk length must be at least 1");
  const std::size_t n = net.node_count();
  NodeMetricVector out{h == 2 ? NodeMetric::accessibility_h2 : NodeMetric::accessibility_h3,
                       std::vector<double>(n, 0.0), std::vector<bool>(n, true)};
  Walker walker(net);
  for (NodeId i = 0; i < n; ++i) {
    walker.run(i, h, [&](unsigned step, const std::vector<double>& p,
                         const std::vector<NodeId>& support) {
      if (step == h) out.values[i] = std::exp(entropy(p, support));
    });
  }
  return out;
}

PathMetrics path_metrics(const WordNetwork& net) {
  const std::size_t n = net.node_count();
  PathMetrics out{{{NodeMetric::shortest_path, std::vector<double>(n, 0.0),
                    std::vector<bool>(n, false)},
                   0.0,
                   0},
                  {NodeMetric::betweenness, std::vector<double>(n, 0.0),
                   std::vector<bool>(n, true)}};
  auto& bc = out.betweenness.values;
  auto& l = out.paths.per_node;

  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    std::size_t distance_sum = 0;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      order.push_back(u);
      distance_sum += static_cast<std::size_t>(dist[u]);
      for (NodeId v : net.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }
    const std::size_t reached = order.size() - 1;
    out.paths.unreachable_pairs += (n - 1) - reached;
    if (reached > 0) {
      l.values[s] = static_cast<double>(distance_sum) / static_cast<double>(reached);
      l.defined[s] = true;
    }
    // Dependencies accumulate in reverse BFS order; predecessors of w are
    // the neighbours one step closer to s.
    for (NodeId v : order) delta[v] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : net.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) bc[w] += delta[w];
    }
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (NodeId i = 0; i < n; ++i) {
    if (l.defined[i]) {
      sum += l.values[i];
      ++count;
    }
  }
  out.paths.mean = count == 0 ? 0.0 : sum / static_cast<double>(count);
  return out;
}

ShortestPathStats shortest_paths(const WordNetwork& net) { return path_metrics(net).paths; }

NodeMetricVector betweenness(const WordNetwork& net) { return path_metrics(net).betweenness; }

Assortativity assortativity(const WordNetwork& net) {
  const double m = static_cast<double>(net.edge_count());
  if (net.edge_count() < 2) return {};
  double product = 0.0;
  double mean_half = 0.0;
  double square_half = 0.0;
  for (auto [i, j] : net.edges()) {
    const double ki = static_cast<double>(net.degree(i));
    const double kj = static_cast<double>(net.degree(j));
    product += ki * kj;
    mean_half += 0.5 * (ki + kj);
    square_half += 0.5 * (ki * ki + kj * kj);
  }
  const double mean = mean_half / m;
  const double numerator = product / m - mean * mean;
  const double denominator = square_half / m - mean * mean;
  // Degrees are integers, so a zero variance is exact up to rounding of the means.
  if (std::abs(denominator) <= 1e-12 * std::max(1.0, square_half / m)) return {};
  return {numerator / denominator, true};
}

Summary summarize(const NodeMetricVector& values) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < values.values.size(); ++i) {
    if (!values.defined[i]) continue;
    sum += values.values[i];
    ++count;
  }
  if (count < 2) {
    throw DataError("cannot summarize " + std::string(to_string(values.metric)) + ": only " +
                    std::to_string(count) + " defined value(s)");
  }
  const double mean = sum / static_cast<double>(count);
  double ss = 0.0;
  for (std::size_t i = 0; i < values.values.size(); ++i) {
    if (!values.defined[i]) continue;
    const double d = values.values[i] - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(count))};
}

}  // namespace textnet
