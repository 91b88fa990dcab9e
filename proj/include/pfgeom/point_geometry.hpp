#pragma once

#include <Eigen/Dense>

#include "pfgeom/covector_field.hpp"
#include "pfgeom/metric.hpp"

namespace pfgeom {

enum class DiffMode { analytic, finite_diff };

/// Per-point geometry of a covector field under a constant diagonal metric.
/// jac(i, j) = d_i N_j of the field (unit-normalized unless built by
/// differential_split_raw), sym = (jac + jac^T) / 2, and antisym stores the
/// matrix W_ij = d_i N_j - d_j N_i, so the 2-form d^N equals
/// 1/2 W_ij dx^i ^ dx^j. jac is rebuilt as sym + antisym / 2, which makes
/// that reconstruction exact by construction.
struct PointGeometry {
  Eigen::VectorXd x;
  Eigen::VectorXd n_cov;   // N_i
  Eigen::VectorXd n_vec;   // N^i = g^{ij} N_j
  double norm = 0.0;       // sqrt |g^{ij} N_i N_j| of the raw field
  double sign = 1.0;       // sign of g(N, N) after normalization (+/-1)
  Eigen::MatrixXd jac;     // J
  Eigen::MatrixXd sym;     // H
  Eigen::MatrixXd antisym; // W

  int dim() const { return static_cast<int>(x.size()); }
  /// H(u, v) = u^i H_ij v^j.
  double h_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  /// W(u, v) = u^i W_ij v^j.
  double w_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
};

/// Normalize a raw covector: N_cov = N_raw / sqrt|g(N, N)|, N_vec raised.
/// Throws ZeroForm when the components vanish and NullNormal when the metric
/// square is below tolerance relative to the component size.
struct UnitNormal {
  Eigen::VectorXd n_cov;
  Eigen::VectorXd n_vec;
  double norm = 0.0;
  double sign = 1.0;
};
UnitNormal metric_dual_unit(const Eigen::VectorXd& n_raw, const MetricSpec& metric,
                            double null_tol = 1e-9);

/// Unit-normalized point geometry. The analytic path differentiates the raw
/// polynomial components exactly and applies the normalization chain rule;
/// finite differences use central steps h_i = cbrt(eps) * max(1, |x_i|) on
/// the normalized evaluations.
PointGeometry differential_split(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                 const Eigen::VectorXd& x,
                                 DiffMode mode = DiffMode::analytic,
                                 double null_tol = 1e-9);

/// Geometry of the raw (unnormalized) field: n_cov is N_raw and jac the raw
/// Jacobian. Used where exact raw-field values are the reference.
PointGeometry differential_split_raw(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                     const Eigen::VectorXd& x, double null_tol = 1e-9);

/// Finite-difference divergence of the unit normal vector field.
double unit_normal_divergence_fd(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                 const Eigen::VectorXd& x);

}  // namespace pfgeom
