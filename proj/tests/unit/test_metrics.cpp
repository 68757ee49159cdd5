#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "graph_checks.hpp"
#include "oracles.hpp"
#include "textnet/error.hpp"
#include "textnet/metrics.hpp"

namespace textnet {
namespace {

using oracle::cycle;
using oracle::path;
using oracle::star;

WordNetwork triangle() { return WordNetwork::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

WordNetwork complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return WordNetwork::from_edges(n, e);
}

TEST(NeighborDegree, StarTrianglePath) {
  const auto s = avg_neighbor_degree(star(3));
  EXPECT_DOUBLE_EQ(s.values[0], 1.0);
  for (int i = 1; i <= 3; ++i) EXPECT_DOUBLE_EQ(s.values[i], 3.0);
  for (double v : avg_neighbor_degree(triangle()).values) EXPECT_DOUBLE_EQ(v, 2.0);
  const auto p = avg_neighbor_degree(path(3));
  EXPECT_DOUBLE_EQ(p.values[0], 2.0);
  EXPECT_DOUBLE_EQ(p.values[1], 1.0);
  EXPECT_DOUBLE_EQ(p.values[2], 2.0);
}

TEST(NeighborDegree, IsolatedNodeFlagged) {
  const auto v = avg_neighbor_degree(WordNetwork::from_edges(3, {{0, 1}}));
  EXPECT_EQ(v.values[2], 0.0);
  EXPECT_FALSE(v.defined[2]);
  EXPECT_EQ(v.defined_count(), 2u);
}

TEST(NeighborDegree, SallyMeanMatchesHandComputation) {
  // Node order: sally constant bruce carmyle think part paris express little
  // search memory moment before identify.
  std::vector<std::pair<NodeId, NodeId>> e = {{0, 1},  {1, 2},   {2, 3},   {3, 4},  {4, 5},
                                              {5, 6},  {6, 7},   {7, 3},   {3, 8},  {8, 0},
                                              {8, 9},  {9, 10},  {10, 11}, {11, 12}, {12, 13}};
  const auto net = WordNetwork::from_edges(14, e);
  const auto kn = avg_neighbor_degree(net);
  const std::vector<double> hand = {2.5, 2, 3, 2.25, 3, 2, 2, 3, 8.0 / 3, 2.5, 2, 2, 1.5, 2};
  for (std::size_t i = 0; i < hand.size(); ++i) EXPECT_NEAR(kn.values[i], hand[i], 1e-12) << i;
  EXPECT_NEAR(summarize(kn).mean, 389.0 / 168.0, 1e-12);
}

TEST(Clustering, TriangleStarAndChordedSquare) {
  EXPECT_DOUBLE_EQ(clustering_global(triangle()), 1.0);
  for (double v : clustering_local(triangle()).values) EXPECT_DOUBLE_EQ(v, 1.0);
  EXPECT_DOUBLE_EQ(clustering_global(star(3)), 0.0);
  for (double v : clustering_local(star(3)).values) EXPECT_DOUBLE_EQ(v, 0.0);
  const auto sq = WordNetwork::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_DOUBLE_EQ(clustering_global(sq), 0.75);
  EXPECT_DOUBLE_EQ(clustering_global(path(2)), 0.0);
}

TEST(WalkDistribution, CycleAndPath) {
  const auto c = cycle(7);
  const auto p = walk_distribution(c, 0, 2);
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[2], 0.25);
  EXPECT_DOUBLE_EQ(p[5], 0.25);
  EXPECT_DOUBLE_EQ(p[1], 0.0);
  const auto q = walk_distribution(path(3), 0, 2);
  EXPECT_DOUBLE_EQ(q[0], 0.5);
  EXPECT_DOUBLE_EQ(q[2], 0.5);
}

TEST(WalkDistribution, RowsAreStochastic) {
  Rng rng(11);
  for (int g = 0; g < 30; ++g) {
    const auto net = oracle::random_graph(rng, 3, 12, true);
    for (NodeId i = 0; i < net.node_count(); ++i)
      for (unsigned h : {1u, 2u, 3u}) {
        const auto p = walk_distribution(net, i, h);
        EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
      }
  }
}

TEST(WalkDistribution, Errors) {
  const auto net = WordNetwork::from_edges(3, {{0, 1}});
  EXPECT_THROW(walk_distribution(net, 2, 2), DataError);
  EXPECT_THROW(walk_distribution(net, 0, 0), DataError);
  EXPECT_THROW(accessibility(net, 2), DataError);
}

TEST(Accessibility, CycleIsTwoRootTwo) {
  for (std::size_t n : {5u, 8u, 13u}) {
    for (double v : accessibility(cycle(n), 2).values) EXPECT_NEAR(v, 2.0 * std::sqrt(2.0), 1e-12);
  }
}

TEST(Accessibility, ConcentratedWalkAndSymmetry) {
  // From a leaf of a single edge every walk of length 2 returns home.
  for (double v : accessibility(path(2), 2).values) EXPECT_DOUBLE_EQ(v, 1.0);
  const auto k4 = accessibility(complete(4), 2).values;
  for (double v : k4) EXPECT_NEAR(v, k4[0], 1e-12);
}

TEST(Accessibility, BoundedByNodeCount) {
  Rng rng(5);
  for (int g = 0; g < 30; ++g) {
    const auto net = oracle::random_graph(rng, 3, 12, true);
    for (unsigned h : {2u, 3u})
      for (double v : accessibility(net, h).values) {
        EXPECT_GE(v, 1.0 - 1e-12);
        EXPECT_LE(v, static_cast<double>(net.node_count()) + 1e-9);
      }
  }
}

TEST(ShortestPaths, PathAndComplete) {
  const auto p = shortest_paths(path(3));
  EXPECT_DOUBLE_EQ(p.per_node.values[0], 1.5);
  EXPECT_DOUBLE_EQ(p.per_node.values[1], 1.0);
  for (double v : shortest_paths(complete(6)).per_node.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(ShortestPaths, DisconnectedPairsCounted) {
  const auto net = WordNetwork::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto s = shortest_paths(net);
  EXPECT_EQ(s.unreachable_pairs, 12u);
  EXPECT_DOUBLE_EQ(s.per_node.values[3], 1.0);
  const auto single = shortest_paths(WordNetwork::from_edges(3, {{0, 1}}));
  EXPECT_FALSE(single.per_node.defined[2]);
}

TEST(Betweenness, PathAndStar) {
  const auto p = betweenness(path(3)).values;
  EXPECT_DOUBLE_EQ(p[0], 0.0);
  EXPECT_DOUBLE_EQ(p[1], 2.0);
  EXPECT_DOUBLE_EQ(p[2], 0.0);
  EXPECT_DOUBLE_EQ(betweenness(star(4)).values[0], 12.0);
}

TEST(Betweenness, DegreeOneNodesAreZero) {
  Rng rng(17);
  for (int g = 0; g < 30; ++g) {
    const auto net = oracle::random_graph(rng, 3, 12, false);
    const auto b = betweenness(net).values;
    for (NodeId i = 0; i < net.node_count(); ++i) {
      EXPECT_GE(b[i], 0.0);
      if (net.degree(i) <= 1) EXPECT_EQ(b[i], 0.0);
    }
  }
}

TEST(Assortativity, StarIsMinusOne) {
  for (std::size_t k : {3u, 5u, 9u}) {
    const auto r = assortativity(star(k));
    EXPECT_TRUE(r.defined);
    EXPECT_NEAR(r.r, -1.0, 1e-12);
  }
}

TEST(Assortativity, RegularGraphIsUndefined) {
  const auto r = assortativity(cycle(6));
  EXPECT_FALSE(r.defined);
  EXPECT_EQ(r.r, 0.0);
  EXPECT_FALSE(assortativity(path(2)).defined);
}

TEST(Summarize, MeanAndPopulationDeviation) {
  NodeMetricVector v{NodeMetric::clustering, {2, 2, 2}, {true, true, true}};
  EXPECT_DOUBLE_EQ(summarize(v).mean, 2.0);
  EXPECT_DOUBLE_EQ(summarize(v).deviation, 0.0);
  NodeMetricVector w{NodeMetric::clustering, {1, 3, 99}, {true, true, false}};
  EXPECT_DOUBLE_EQ(summarize(w).mean, 2.0);
  EXPECT_DOUBLE_EQ(summarize(w).deviation, 1.0);
  NodeMetricVector one{NodeMetric::clustering, {1, 5}, {true, false}};
  EXPECT_THROW(summarize(one), DataError);
}

TEST(Oracles, RandomGraphsMatchBruteForce) {
  Rng rng(2024);
  for (int g = 0; g < 60; ++g) {
    const auto net = oracle::random_graph(rng, 3, 12, g % 2 == 0);
    const auto problems = oracle::compare_metrics(net);
    EXPECT_TRUE(problems.empty()) << problems.front();
  }
}

TEST(Invariants, RelabelingLeavesSummariesUnchanged) {
  Rng rng(99);
  for (int g = 0; g < 20; ++g) {
    const auto net = oracle::random_graph(rng, 4, 12, true);
    const std::size_t n = net.node_count();
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_index(rng, i + 1)]);
    std::vector<std::pair<NodeId, NodeId>> e;
    for (auto [a, b] : net.edges()) e.emplace_back(perm[a], perm[b]);
    const auto other = WordNetwork::from_edges(n, e);
    auto same = [](const NodeMetricVector& x, const NodeMetricVector& y) {
      if (x.defined_count() < 2) return;
      EXPECT_NEAR(summarize(x).mean, summarize(y).mean, 1e-9);
      EXPECT_NEAR(summarize(x).deviation, summarize(y).deviation, 1e-9);
    };
    same(avg_neighbor_degree(net), avg_neighbor_degree(other));
    same(clustering_local(net), clustering_local(other));
    same(accessibility(net, 2), accessibility(other, 2));
    same(accessibility(net, 3), accessibility(other, 3));
    same(betweenness(net), betweenness(other));
    same(shortest_paths(net).per_node, shortest_paths(other).per_node);
    EXPECT_NEAR(assortativity(net).r, assortativity(other).r, 1e-9);
    EXPECT_NEAR(clustering_global(net), clustering_global(other), 1e-12);
  }
}

TEST(Invariants, VertexTransitiveGraphsHaveZeroDeviation) {
  for (const auto& net : {cycle(9), complete(5)}) {
    EXPECT_NEAR(summarize(avg_neighbor_degree(net)).deviation, 0.0, 1e-12);
    EXPECT_NEAR(summarize(clustering_local(net)).deviation, 0.0, 1e-12);
    EXPECT_NEAR(summarize(accessibility(net, 2)).deviation, 0.0, 1e-12);
    EXPECT_NEAR(summarize(accessibility(net, 3)).deviation, 0.0, 1e-12);
    EXPECT_NEAR(summarize(betweenness(net)).deviation, 0.0, 1e-9);
    EXPECT_NEAR(summarize(shortest_paths(net).per_node).deviation, 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace textnet
