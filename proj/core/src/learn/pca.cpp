#include "textnet/learn/pca.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "textnet/error.hpp"

namespace textnet::learn {

PcaResult pca_project(const std::vector<std::vector<double>>& rows, std::size_t dims) {
  if (rows.empty()) throw DataError("PCA needs at least one row");
  const std::size_t n = rows.size();
  const std::size_t f = rows.front().size();
  if (dims == 0 || dims > f) {
    throw DataError("PCA dimension " + std::to_string(dims) + " exceeds the " +
                    std::to_string(f) + " features");
  }
  if (n < dims || n < 2) throw DataError("PCA needs at least max(2, dims) rows");

  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(f));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != f) throw DataError("PCA rows have different widths");
    for (std::size_t j = 0; j < f; ++j) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw DataError("PCA eigen-decomposition failed");

  // Eigen returns ascending eigenvalues; walk them from the top.
  const Eigen::VectorXd values = solver.eigenvalues();
  const Eigen::MatrixXd vectors = solver.eigenvectors();
  PcaResult out;
  out.mean.assign(mean.data(), mean.data() + f);
  for (std::size_t k = 0; k < f; ++k) {
    out.eigenvalues.push_back(std::max(0.0, values(static_cast<Eigen::Index>(f - 1 - k))));
  }
  out.total_variance = cov.trace();

  Eigen::MatrixXd basis(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(dims));
  for (std::size_t k = 0; k < dims; ++k) {
    Eigen::VectorXd axis = vectors.col(static_cast<Eigen::Index>(f - 1 - k));
    Eigen::Index largest = 0;
    axis.cwiseAbs().maxCoeff(&largest);
    if (axis(largest) < 0.0) axis = -axis;
    basis.col(static_cast<Eigen::Index>(k)) = axis;
    out.components.emplace_back(axis.data(), axis.data() + f);
    out.explained_variance_ratio.push_back(
        out.total_variance > 0.0 ? out.eigenvalues[k] / out.total_variance : 0.0);
  }
  const Eigen::MatrixXd projected = x * basis;
  out.coordinates.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dims; ++k) {
      out.coordinates[i].push_back(
          projected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
    }
  }
  return out;
}

}  // namespace textnet::learn
