#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pfgeom/metric.hpp"
#include "pfgeom/point_geometry.hpp"

namespace pfgeom {

/// Orthonormal frame for the hyperplane annihilated by N at a point,
/// together with the unit normal. Columns of tangent are the frame vectors
/// e_a (ambient components) with g(e_a, e_a) = signs[a] = +/-1; coframe rows
/// are the covectors theta^a dual to e_a on the hyperplane.
struct AdaptedFrame {
  Eigen::VectorXd x;
  Eigen::MatrixXd tangent;   // dim x n
  Eigen::VectorXd signs;     // n entries, +/-1
  Eigen::MatrixXd coframe;   // n x dim
  Eigen::VectorXd n_cov;
  Eigen::VectorXd n_vec;
  double normal_sign = 1.0;  // g(N, N)

  int dim() const { return static_cast<int>(x.size()); }
  int n() const { return static_cast<int>(tangent.cols()); }
  /// Frame components of an ambient vector: t^a = theta^a(v).
  Eigen::VectorXd to_frame(const Eigen::VectorXd& v) const { return coframe * v; }
  /// Ambient vector from frame components.
  Eigen::VectorXd to_ambient(const Eigen::VectorXd& t) const { return tangent * t; }
  /// Restricted metric in frame coordinates, diag(signs).
  Eigen::MatrixXd restricted_metric() const {
    return Eigen::MatrixXd(signs.asDiagonal());
  }
};

/// Projector pair: P_n v = sign(g(N,N)) N(v) N_vec and P_t = I - P_n. The
/// sign factor keeps both idempotent when the unit normal has g(N, N) = -1.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> tangent_projectors(const PointGeometry& geom);

/// Gram-Schmidt with column pivoting on the projected natural basis
/// {P_t(d_i)}: repeatedly pick the candidate with the largest |g(v, v)|
/// after orthogonalization (ties toward the lower axis index), normalize to
/// |g(e,e)| = 1. Throws DegenerateTangentMetric when every remaining pivot
/// is metrically null.
AdaptedFrame adapted_frame(const PointGeometry& geom, const MetricSpec& metric,
                           double pivot_tol = 1e-10);

/// Same construction, but the candidate columns are visited in the given
/// axis order without pivoting (used to check frame invariance of spectra).
AdaptedFrame adapted_frame_ordered(const PointGeometry& geom, const MetricSpec& metric,
                                   const std::vector<int>& axis_order,
                                   double pivot_tol = 1e-10);

/// Restriction Hbar_ab = H(e_a, e_b) of the symmetric part to the frame.
Eigen::MatrixXd second_fundamental_restricted(const PointGeometry& geom,
                                              const AdaptedFrame& frame);

/// Split of the antisymmetric part over the frame: varpi_ab = W(e_a, e_b)
/// and eta_a = sign(g(N,N)) W(e_a, N_vec), fixed so that for all u, v
///   W(u, v) = varpi(u_t, v_t) + eta(u_t) N(v) - eta(v_t) N(u).
struct OmegaSplit {
  Eigen::MatrixXd varpi;  // n x n antisymmetric
  Eigen::VectorXd eta;    // n
};
OmegaSplit omega_decompose(const PointGeometry& geom, const AdaptedFrame& frame);

}  // namespace pfgeom
