#pragma once

#include <cstddef>
#include <vector>

namespace textnet::learn {

struct PcaResult {
  /// One row of `dims` coordinates per input row.
  std::vector<std::vector<double>> coordinates;
  /// Principal axes (unit length, largest coefficient positive), one per kept dimension.
  std::vector<std::vector<double>> components;
  /// All covariance eigenvalues in descending order.
  std::vector<double> eigenvalues;
  /// Variance fraction of each kept component; non-increasing, sums to <= 1.
  std::vector<double> explained_variance_ratio;
  std::vector<double> mean;
  double total_variance = 0.0;
};

/// Projects centred rows onto the top `dims` eigenvectors of their sample
/// covariance. Expects standardized features. Throws DataError when dims
/// exceeds the feature count or there are fewer rows than dims.
PcaResult pca_project(const std::vector<std::vector<double>>& rows, std::size_t dims = 2);

}  // namespace textnet::learn
