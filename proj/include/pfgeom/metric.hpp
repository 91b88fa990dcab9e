#pragma once

#include <Eigen/Dense>
#include <string>

namespace pfgeom {

/// Constant diagonal metric on R^dim. Entries may be +/-1 signature values
/// or positive scales; inverse_diag is stored so raising indices is exact.
struct MetricSpec {
  int dim = 0;
  Eigen::VectorXd diag;
  Eigen::VectorXd inverse_diag;
  std::string name;  // "euclidean", "minkowski", "bundle5", or "diag"

  static MetricSpec euclidean(int dim);
  /// diag [1, -1, -1, -1]; requires dim == 4.
  static MetricSpec minkowski();
  /// diag [1, -1, -1, -1, 1]; requires dim == 5.
  static MetricSpec bundle5();
  static MetricSpec from_diag(const Eigen::VectorXd& diag);
  static MetricSpec preset(const std::string& name, int dim);

  /// g^{ij} a_i b_j for covectors.
  double pair_covectors(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  /// g_{ij} u^i v^j for vectors.
  double pair_vectors(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  /// Raise the index of a covector.
  Eigen::VectorXd raise(const Eigen::VectorXd& covector) const;
  /// Lower the index of a vector.
  Eigen::VectorXd lower(const Eigen::VectorXd& vector) const;
};

}  // namespace pfgeom
