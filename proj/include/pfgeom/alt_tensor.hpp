#pragma once

#include <Eigen/Dense>
#include <vector>

namespace pfgeom {

/// Fully antisymmetric degree-k tensor on R^dim, stored on the C(dim, k)
/// strictly increasing index tuples (lexicographic order). Component
/// convention: a 1-form a has comps[i] = a_i; a 2-form given by an
/// antisymmetric matrix W (form = 1/2 W_ij dx^i ^ dx^j) has comps on the
/// tuple (i, j), i < j, equal to W_ij; wedge normalization makes
/// (dx^i)^(dx^j) carry component +1 on (i, j).
class AltTensor {
 public:
  AltTensor() = default;
  AltTensor(int dim, int degree);

  static AltTensor from_covector(const Eigen::VectorXd& components);
  /// From an antisymmetric matrix W, comps[(i,j)] = W(i,j) for i < j.
  static AltTensor from_antisymmetric_matrix(const Eigen::MatrixXd& w);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(comps_.size()); }
  double& operator[](int canonical_index) { return comps_[canonical_index]; }
  double operator[](int canonical_index) const { return comps_[canonical_index]; }
  const std::vector<double>& components() const { return comps_; }

  /// Component on an arbitrary index tuple; carries the permutation sign,
  /// zero on repeated indices.
  double component(const std::vector<int>& indices) const;

  double frobenius_norm() const;
  double max_abs() const;
  bool is_zero() const;

  AltTensor operator+(const AltTensor& other) const;
  AltTensor operator*(double scalar) const;

  /// The canonical tuple list for (dim, k), lexicographic.
  static const std::vector<std::vector<int>>& canonical_tuples(int dim, int k);

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::vector<double> comps_;
};

/// Graded-commutative shuffle wedge: a^b = (-1)^{pq} b^a, associative, and
/// bilinear. When the degrees overflow the dimension the zero tensor of
/// degree dim is returned.
AltTensor wedge_product(const AltTensor& a, const AltTensor& b);

}  // namespace pfgeom
