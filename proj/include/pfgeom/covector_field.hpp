#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pfgeom/polynomial.hpp"

namespace pfgeom {

/// A covector field N = N_i dx^i with polynomial components. Every catalog
/// entry lowers to its exact polynomial component table on construction, so
/// the analytic derivative path is exact. The electromagnetic bundle form is
/// assembled by the em module, which also produces one of these.
class CovectorFieldSpec {
 public:
  CovectorFieldSpec() = default;
  CovectorFieldSpec(std::vector<Polynomial> components, std::string label);

  /// N = d(|x|^2 / 2), i.e. N_i = x_i.
  static CovectorFieldSpec exact_sphere(int dim);
  /// N = dx^dim (constant last-coordinate form).
  static CovectorFieldSpec linear(int dim);
  /// N = lambda(x) * d(phi), both polynomial. Default: lambda = 1 + x0^2,
  /// phi = x_{dim-1}.
  static CovectorFieldSpec integrating_factor(const Polynomial& lambda,
                                              const Polynomial& phi);
  static CovectorFieldSpec integrating_factor_default(int dim);
  /// N = dz - y dx on R^3.
  static CovectorFieldSpec contact();
  /// N = dx^1 + sum_{i=1..k} x^{2i} dx^{2i+1}; requires dim >= 2k + 1.
  static CovectorFieldSpec darboux(int k, int dim);
  /// Catalog dispatch by name ("exact_sphere", "linear", "contact",
  /// "darboux_k" with params k). "integrating_factor" requires the two
  /// polynomials and has its own factory; "em" is built by the em module.
  static CovectorFieldSpec catalog(const std::string& name, int dim, int k = 1);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::vector<Polynomial>& components() const { return components_; }

  /// Raw (unnormalized) N_i(x).
  Eigen::VectorXd eval(const Eigen::VectorXd& x) const;
  /// Raw Jacobian, J[i][j] = d N_j / d x^i.
  Eigen::MatrixXd raw_jacobian(const Eigen::VectorXd& x) const;

  /// Field with every component scaled by a constant (same hyperplanes).
  CovectorFieldSpec scaled(double factor) const;

 private:
  int dim_ = 0;
  std::vector<Polynomial> components_;
  std::vector<std::vector<Polynomial>> derivatives_;  // [j][i] = d N_j / d x^i
  std::string label_;
};

/// Raw components of a field at a point; errors on dimension mismatch.
Eigen::VectorXd eval_covector(const CovectorFieldSpec& spec, const Eigen::VectorXd& x);

}  // namespace pfgeom
