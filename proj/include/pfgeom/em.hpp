#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pfgeom/covector_field.hpp"
#include "pfgeom/curves.hpp"
#include "pfgeom/pfaff.hpp"
#include "pfgeom/polynomial.hpp"

namespace pfgeom::em {

/// Four-potential A = A_mu(x) dx^mu on Minkowski space, with the charge
/// parameters of the particle that moves in it. Field strength convention:
/// F_mu_nu = d_mu A_nu - d_nu A_mu.
struct FourPotentialSpec {
  enum class Kind { uniform_b, crossed_eb, pure_gauge, custom };

  Kind kind = Kind::uniform_b;
  double b_field = 1.0;                 // uniform_b, crossed_eb
  double e_field = 0.0;                 // crossed_eb
  Polynomial gauge_phi;                 // pure_gauge: A = -d(phi)
  std::vector<Polynomial> custom_a;     // custom: 4 polynomials on R^4
  double q = 1.0;
  double m = 1.0;
  double c = 1.0;

  static FourPotentialSpec uniform_b_spec(double b);
  /// F_01 = E and F_23 = B, realized by A = (-E x1, 0, 0, B x2).
  static FourPotentialSpec crossed_eb_spec(double e, double b);
  static FourPotentialSpec pure_gauge_spec(const Polynomial& phi);
  static FourPotentialSpec custom_spec(std::vector<Polynomial> a);

  /// The Lagrange multiplier -q / (m c) that turns the constrained geodesic
  /// equation into the Lorentz equation.
  double lambda() const { return -q / (m * c); }

  /// Polynomial components A_mu on R^4.
  std::vector<Polynomial> components() const;
  /// F_mu_nu at a base point (antisymmetric 4x4).
  Eigen::MatrixXd field_strength(const Eigen::VectorXd& x4) const;
  /// A_mu(x) evaluated.
  Eigen::VectorXd potential(const Eigen::VectorXd& x4) const;

  void validate() const;
  std::string kind_name() const;
};

/// The 5-component connection form (A_0, A_1, A_2, A_3, 1) over coordinates
/// (x^0..x^3, phi), to be used with the "bundle5" metric. The fiber is
/// modeled as the real line.
CovectorFieldSpec build_bundle_form(const FourPotentialSpec& pot);

struct EMReport {
  double f_norm = 0.0;         // max over samples of |F|
  double af_norm = 0.0;        // |A ^ F|
  double ff_norm = 0.0;        // |F ^ F|
  double dphi_ff_norm = 0.0;   // |dphi ^ F ^ F|
  bool gauge_flag = false;     // F below tolerance on every sample
  int degree = 0;              // 4, 3, or 2 from the vanishing pattern
};

/// Samples F over a 4-dimensional base grid (the fiber coordinate is
/// irrelevant), accumulates the wedge norms, and classifies: exact (degree
/// 4), decomposable F (degree 3), or generic (degree 2). The same relative
/// vanishing policy as the Pfaff classifier is used, so the result can be
/// cross-checked against it on the assembled 5-dimensional form.
EMReport em_integrability_report(const FourPotentialSpec& pot, const GridSpec& grid4,
                                 double tol = 1e-9);

/// Proper-time RK4 for m xddot^mu = q eta^{mu nu} F_nu_rho xdot^rho.
/// Requires eta(v0, v0) = c^2 within 1e-9. The drift column records
/// |eta(v, v) - c^2|.
Trajectory lorentz_integrate(const FourPotentialSpec& pot, const Eigen::VectorXd& x0,
                             const Eigen::VectorXd& v0, const IntegratorSettings& settings);

/// The same dynamics as the constrained geodesic of the bundle form with the
/// multiplier held at -q/(mc): the base obeys the Lorentz equation and the
/// fiber velocity is slaved to the constraint, phi_dot = -A(xdot). Returns a
/// 5-dimensional trajectory (base + fiber); drift records |Abar(vbar)| and
/// speed the gauge-invariant base speed. NullNormal when eta(A, A) + 1
/// degenerates along the path.
Trajectory constrained_geodesic_em(const FourPotentialSpec& pot, const Eigen::VectorXd& x0,
                                   const Eigen::VectorXd& v0,
                                   const IntegratorSettings& settings);

struct TrajectoryDistance {
  double max_pointwise = 0.0;
  double rms = 0.0;
};

/// Pointwise Euclidean distance over the shared leading coordinate block
/// (the 4-dimensional base when comparing bundle and base trajectories).
TrajectoryDistance trajectory_compare(const Trajectory& a, const Trajectory& b);

}  // namespace pfgeom::em
