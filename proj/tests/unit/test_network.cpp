#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "textnet/error.hpp"
#include "textnet/network.hpp"

namespace textnet {
namespace {

TokenStream stream_of(std::string_view text) {
  TokenStream s{"t", {}};
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) s.lemmas.push_back(w);
  return s;
}

const char* kSallyLemmas =
    "sally constant bruce carmyle think part paris express carmyle little sally little search "
    "memory moment before identify";

TEST(BuildNetwork, SallyHasFourteenNodesAndFifteenEdges) {
  const auto net = build_network(stream_of(kSallyLemmas));
  EXPECT_EQ(net.node_count(), 14u);
  EXPECT_EQ(net.edge_count(), 15u);
  EXPECT_EQ(net.label(0), "sally");
  EXPECT_EQ(net.label(13), "identify");
  // Hand-listed adjacencies.
  const std::set<std::pair<std::string, std::string>> expected = {
      {"constant", "sally"},   {"bruce", "constant"},  {"bruce", "carmyle"},
      {"carmyle", "think"},    {"part", "think"},      {"paris", "part"},
      {"express", "paris"},    {"carmyle", "express"}, {"carmyle", "little"},
      {"little", "sally"},     {"little", "search"},   {"memory", "search"},
      {"memory", "moment"},    {"before", "moment"},   {"before", "identify"}};
  std::set<std::pair<std::string, std::string>> got;
  for (auto [i, j] : net.edges()) {
    auto a = net.label(i), b = net.label(j);
    if (b < a) std::swap(a, b);
    got.emplace(a, b);
  }
  EXPECT_EQ(got, expected);
}

TEST(BuildNetwork, RepeatedPairsCollapse) {
  const auto net = build_network(stream_of("a b a b"));
  EXPECT_EQ(net.node_count(), 2u);
  EXPECT_EQ(net.edge_count(), 1u);
}

TEST(BuildNetwork, SelfAdjacencyMakesNoEdge) {
  const auto net = build_network(stream_of("a a b"));
  EXPECT_EQ(net.node_count(), 2u);
  EXPECT_EQ(net.edge_count(), 1u);
  EXPECT_FALSE(net.adjacent(0, 0));
  EXPECT_TRUE(net.adjacent(0, 1));
}

TEST(BuildNetwork, TooShortStreamIsRejected) {
  EXPECT_THROW(build_network(stream_of("alone")), DataError);
  EXPECT_THROW(build_network(stream_of("")), DataError);
}

TEST(BuildNetwork, AdjacencyIsSymmetricAndDegreesMatchEdges) {
  const auto net = build_network(stream_of(kSallyLemmas));
  std::size_t degree_sum = 0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    degree_sum += net.degree(i);
    EXPECT_GE(net.degree(i), 1u);
    for (NodeId j : net.neighbors(i)) EXPECT_TRUE(net.adjacent(j, i));
  }
  EXPECT_EQ(degree_sum, 2 * net.edge_count());
}

TEST(WordNetwork, FromEdgesDedupesAndDropsLoops) {
  const auto net = WordNetwork::from_edges(3, {{0, 1}, {1, 0}, {2, 2}, {1, 2}});
  EXPECT_EQ(net.edge_count(), 2u);
  EXPECT_EQ(net.degree(2), 1u);
  EXPECT_EQ(net.label(2), "2");
}

TEST(WriteEdgeList, OneLinePerEdge) {
  std::ostringstream out;
  write_edge_list(build_network(stream_of("x y z")), out);
  EXPECT_EQ(out.str(), "x\ty\ny\tz\n");
}

TEST(ShuffleStream, PreservesMultiset) {
  const auto s = stream_of(kSallyLemmas);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto shuffled = shuffle_stream(s, seed).lemmas;
    auto original = s.lemmas;
    std::sort(shuffled.begin(), shuffled.end());
    std::sort(original.begin(), original.end());
    EXPECT_EQ(shuffled, original);
  }
}

TEST(ShuffleStream, DeterministicPerSeed) {
  const auto s = stream_of(kSallyLemmas);
  EXPECT_EQ(shuffle_stream(s, 9).lemmas, shuffle_stream(s, 9).lemmas);
  EXPECT_NE(shuffle_stream(s, 9).lemmas, shuffle_stream(s, 10).lemmas);
}

TEST(ShuffleStream, UniformOverPermutations) {
  // 5 distinct tokens: 120 permutations, 1000 seeds. Chi-square with 119
  // degrees of freedom; 180 is well past the 0.999 quantile (~173).
  const auto s = stream_of("a b c d e");
  std::map<std::vector<std::string>, int> counts;
  const int trials = 1000;
  for (int seed = 0; seed < trials; ++seed) ++counts[shuffle_stream(s, seed).lemmas];
  EXPECT_LE(counts.size(), 120u);
  double chi2 = 0;
  const double expected = trials / 120.0;
  for (const auto& [perm, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  chi2 += (120.0 - static_cast<double>(counts.size())) * expected;
  EXPECT_LT(chi2, 180.0);
}

}  // namespace
}  // namespace textnet
