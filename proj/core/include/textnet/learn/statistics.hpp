#pragma once

#include <span>
#include <vector>

namespace textnet::learn {

/// 1-based ranks; tied values share the average of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation. Throws DataError for mismatched or short inputs
/// and for zero variance.
double pearson(std::span<const double> a, std::span<const double> b);

/// Pearson correlation of the average ranks of a and b.
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace textnet::learn
