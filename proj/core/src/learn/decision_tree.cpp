#include <algorithm>
#include <cmath>
#include <numeric>

#include "textnet/error.hpp"
#include "textnet/learn/classifiers.hpp"

namespace textnet::learn {

double entropy(const std::array<std::size_t, kNumLabels>& counts) {
  const double total = static_cast<double>(counts[0] + counts[1]);
  if (total == 0.0) return 0.0;
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double information_gain(const std::array<std::size_t, kNumLabels>& left,
                        const std::array<std::size_t, kNumLabels>& right) {
  const std::array<std::size_t, kNumLabels> parent{left[0] + right[0], left[1] + right[1]};
  const double n = static_cast<double>(parent[0] + parent[1]);
  if (n == 0.0) return 0.0;
  const double nl = static_cast<double>(left[0] + left[1]);
  const double nr = static_cast<double>(right[0] + right[1]);
  return entropy(parent) - (nl / n) * entropy(left) - (nr / n) * entropy(right);
}

namespace {

// Gains within this margin are treated as equal. Ties go to the split whose
// left row set is lexicographically smallest, then to the wider gap between
// the two sides, so the tree does not depend on column order.
constexpr double kGainTolerance = 1e-12;

Label majority(const std::array<std::size_t, kNumLabels>& counts) {
  return counts[1] > counts[0] ? Label::fake : Label::real;
}

class TreeBuilder {
 public:
  TreeBuilder(const LabeledDataset& data, std::size_t max_depth, std::size_t min_leaf)
      : data_(data), max_depth_(max_depth), min_leaf_(std::max<std::size_t>(1, min_leaf)) {}

  std::vector<TreeNode> build() {
    std::vector<std::size_t> all(data_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    grow(all, 0);
    return std::move(nodes_);
  }

 private:
  struct Split {
    double gain = 0.0;
    std::size_t feature = 0;
    double threshold = 0.0;
    bool found = false;
    double gap = 0.0;
    std::vector<std::size_t> left_rows;  // sorted
  };

  std::array<std::size_t, kNumLabels> histogram(const std::vector<std::size_t>& rows) const {
    std::array<std::size_t, kNumLabels> counts{};
    for (std::size_t i : rows) ++counts[static_cast<std::size_t>(data_.labels[i])];
    return counts;
  }

  Split best_split(std::vector<std::size_t> rows) const {
    const auto total = histogram(rows);
    Split best;
    for (std::size_t f = 0; f < data_.feature_count(); ++f) {
      std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        const double va = data_.rows[a][f];
        const double vb = data_.rows[b][f];
        return va != vb ? va < vb : a < b;
      });
      std::array<std::size_t, kNumLabels> left{};
      for (std::size_t pos = 0; pos + 1 < rows.size(); ++pos) {
        ++left[static_cast<std::size_t>(data_.labels[rows[pos]])];
        const double here = data_.rows[rows[pos]][f];
        const double next = data_.rows[rows[pos + 1]][f];
        if (here == next) continue;
        const std::size_t n_left = pos + 1;
        if (n_left < min_leaf_ || rows.size() - n_left < min_leaf_) continue;
        const std::array<std::size_t, kNumLabels> right{total[0] - left[0], total[1] - left[1]};
        const double gain = information_gain(left, right);
        const bool better = !best.found || gain > best.gain + kGainTolerance;
        if (!better && gain < best.gain - kGainTolerance) continue;
        std::vector<std::size_t> left_rows(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n_left));
        std::sort(left_rows.begin(), left_rows.end());
        const double gap = next - here;
        if (better || left_rows < best.left_rows ||
            (left_rows == best.left_rows && gap > best.gap)) {
          best = {gain, f, here + gap / 2.0, true, gap, std::move(left_rows)};
        }
      }
    }
    return best;
  }

  std::int32_t grow(const std::vector<std::size_t>& rows, std::size_t depth) {
    const auto index = static_cast<std::int32_t>(nodes_.size());
    const auto counts = histogram(rows);
    nodes_.push_back(TreeNode{true, majority(counts), 0, 0.0, -1, -1});
    const bool pure = counts[0] == 0 || counts[1] == 0;
    if (pure || depth >= max_depth_) return index;
    const Split split = best_split(rows);
    if (!split.found || split.gain <= kGainTolerance) return index;

    std::vector<std::size_t> left, right;
    for (std::size_t i : rows) {
      (data_.rows[i][split.feature] <= split.threshold ? left : right).push_back(i);
    }
    const std::int32_t l = grow(left, depth + 1);
    const std::int32_t r = grow(right, depth + 1);
    TreeNode& node = nodes_[static_cast<std::size_t>(index)];
    node.leaf = false;
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return index;
  }

  const LabeledDataset& data_;
  std::size_t max_depth_;
  std::size_t min_leaf_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

DecisionTree DecisionTree::train(const LabeledDataset& data, std::size_t max_depth,
                                 std::size_t min_leaf) {
  if (data.size() == 0) throw DataError("cannot grow a decision tree on an empty dataset");
  data.validate();
  DecisionTree tree;
  tree.nodes_ = TreeBuilder(data, max_depth, min_leaf).build();
  return tree;
}

DecisionTree DecisionTree::from_nodes(std::vector<TreeNode> nodes) {
  if (nodes.empty()) throw DataError("a decision tree needs at least one node");
  for (const auto& node : nodes) {
    if (node.leaf) continue;
    const auto n = static_cast<std::int32_t>(nodes.size());
    if (node.left <= 0 || node.right <= 0 || node.left >= n || node.right >= n) {
      throw DataError("decision tree node has an invalid child index");
    }
  }
  DecisionTree tree;
  tree.nodes_ = std::move(nodes);
  return tree;
}

Label DecisionTree::predict(std::span<const double> query) const {
  std::size_t at = 0;
  for (std::size_t steps = 0; steps <= nodes_.size(); ++steps) {
    const TreeNode& node = nodes_[at];
    if (node.leaf) return node.label;
    if (node.feature >= query.size()) throw DataError("query is missing a tested feature");
    const double v = query[node.feature];
    if (!std::isfinite(v)) throw DataError("non-finite feature value in decision tree query");
    at = static_cast<std::size_t>(v <= node.threshold ? node.left : node.right);
  }
  throw DataError("decision tree contains a cycle");
}

std::size_t DecisionTree::depth() const {
  // Iterative DFS over (node, depth).
  std::size_t deepest = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [at, d] = stack.back();
    stack.pop_back();
    if (d > nodes_.size()) throw DataError("decision tree contains a cycle");
    const TreeNode& node = nodes_[at];
    if (node.leaf) {
      deepest = std::max(deepest, d);
      continue;
    }
    stack.emplace_back(static_cast<std::size_t>(node.left), d + 1);
    stack.emplace_back(static_cast<std::size_t>(node.right), d + 1);
  }
  return deepest;
}

}  // namespace textnet::learn
