#pragma once

#include <Eigen/Dense>
#include <vector>

namespace pfgeom {

/// One monomial term: coeff * prod_i x_i^exponents[i].
struct Term {
  double coeff = 0.0;
  std::vector<int> exponents;
};

/// Sparse multivariate polynomial with integer exponents. Terms are kept in
/// canonical form (sorted lexicographically by exponents, merged, zero terms
/// dropped) so evaluation order is deterministic across runs.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {}
  Polynomial(int dim, std::vector<Term> terms);

  static Polynomial zero(int dim) { return Polynomial(dim); }
  static Polynomial constant(int dim, double value);
  static Polynomial monomial(int dim, double coeff, std::vector<int> exponents);
  /// The coordinate function x_index.
  static Polynomial coordinate(int dim, int index);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  double eval(const Eigen::VectorXd& x) const;
  Polynomial derivative(int axis) const;

  /// Re-embed into a larger coordinate space; new axes get exponent 0.
  Polynomial extended(int new_dim) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double scalar) const;
  Polynomial operator-() const { return *this * -1.0; }

 private:
  void canonicalize();

  int dim_ = 0;
  std::vector<Term> terms_;
};

}  // namespace pfgeom
