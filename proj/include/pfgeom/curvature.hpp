#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "pfgeom/frame.hpp"

namespace pfgeom {

enum class PointClass {
  elliptic,
  hyperbolic,
  parabolic,
  umbilic,
  flat,
  indefinite_metric,
};

const char* to_string(PointClass c);

/// Principal-curvature spectrum of the shape operator g^{ac} Hbar_cb.
/// Definite restricted metrics go through a symmetric pencil solve
/// (guaranteed real spectrum); indefinite ones may produce complex pairs,
/// which are reported with classification indefinite_metric instead of
/// failing.
struct CurvatureReport {
  Eigen::VectorXd point;                         // filled by the _at wrapper
  std::vector<std::complex<double>> eigenvalues; // ascending by real part
  bool real_spectrum = true;
  Eigen::VectorXd principal;                     // real spectra only, ascending
  PointClass classification = PointClass::flat;
  double mean_curvature = 0.0;      // (1/n) sum kappa_a
  double gaussian_curvature = 0.0;  // prod kappa_a
  std::vector<double> radii;        // 1 / kappa_a for nonzero kappa_a
};

CurvatureReport curvature_report(const Eigen::MatrixXd& h_restricted,
                                 const Eigen::MatrixXd& restricted_metric,
                                 double eigen_zero_tol = 1e-8);

/// Full pipeline at a point: differential split, adapted frame, restricted
/// second fundamental form, spectrum.
CurvatureReport curvature_report_at(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                    const Eigen::VectorXd& x,
                                    DiffMode mode = DiffMode::analytic,
                                    double eigen_zero_tol = 1e-8);

struct NormalCurvature {
  double value = 0.0;      // -Hbar(t, t)
  bool asymptotic = false; // |Hbar(t, t)| below tolerance
};

/// t is given in frame coordinates and must be a unit vector of the
/// restricted metric diag(signs).
NormalCurvature normal_curvature_of_direction(const Eigen::MatrixXd& h_restricted,
                                              const Eigen::VectorXd& signs,
                                              const Eigen::VectorXd& t,
                                              double asymptotic_tol = 1e-8,
                                              double unit_tol = 1e-8);

/// Closed-form null directions of a 2x2 quadratic Hbar(t, t) = 0, available
/// at hyperbolic points of a pseudo-surface (n = 2). Returns the two unit
/// frame directions, or nothing when the quadratic is definite or zero.
std::vector<Eigen::Vector2d> asymptotic_directions(const Eigen::MatrixXd& h_restricted,
                                                   double tol = 1e-12);

}  // namespace pfgeom
