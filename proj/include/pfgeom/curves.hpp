#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pfgeom/covector_field.hpp"
#include "pfgeom/frame.hpp"
#include "pfgeom/metric.hpp"
#include "pfgeom/point_geometry.hpp"

namespace pfgeom {

/// drift and speed are recomputed from (x, v) when the state is stored,
/// never carried along.
struct TrajectoryState {
  double s = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd v;
  double lambda = 0.0;
  double drift = 0.0;  // |N(v)| of the unit field (or the bundle form for em)
  double speed = 0.0;  // sqrt |g(v, v)|
};

struct IntegratorSettings {
  double step = 1e-3;
  long steps = 1;
  bool velocity_projection = false;
  bool renormalize_speed = false;
  /// guard against runaway jobs: step * steps must stay below this
  double parameter_ceiling = 1e4;

  void validate() const;
};

enum class TrajectoryStatus {
  ok,
  aborted_null_normal,
  stopped_eigenvalue_collision,
};

enum class CurveKind { normal_curve, geodesic };

struct Trajectory {
  int dim = 0;
  std::string kind;
  std::vector<TrajectoryState> states;
  TrajectoryStatus status = TrajectoryStatus::ok;
  std::string message;
  double step = 0.0;
  long steps = 0;
  bool velocity_projection = false;

  double max_drift() const;
  const TrajectoryState& back() const { return states.back(); }
};

/// Acceleration of a normal curve: a^i = -N^i H_jk v^j v^k.
Eigen::VectorXd normal_curve_rhs(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& v);

/// Constrained-geodesic acceleration a^i = -(dl/ds) N^i - l g^{ij} W_jk v^k.
/// dl/ds is closed by differentiating the constraint N(v) = 0 along the
/// curve: dl/ds = sign(g(N,N)) (H(v,v) - l N^j W_jk v^k), which reduces to
/// dl/ds = H(v,v) when the field is closed.
struct GeodesicRhs {
  Eigen::VectorXd acceleration;
  double dlambda = 0.0;
};
GeodesicRhs constrained_geodesic_rhs(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                     const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                     double lambda);

/// Fixed-step RK4 over the chosen right-hand side. The initial velocity must
/// satisfy the constraint to 1e-10 (it is projected first when
/// velocity_projection is on; renormalize_speed rescales it to unit speed).
/// With projection on, after every step v is projected back to the
/// hyperplane and rescaled to its pre-projection speed. A NullNormal on the
/// way aborts with the partial trajectory flagged; a component beyond 1e12
/// throws NumericalBlowup.
Trajectory integrate(const CovectorFieldSpec& spec, const MetricSpec& metric, CurveKind kind,
                     const Eigen::VectorXd& x0, const Eigen::VectorXd& v0, double lambda0,
                     const IntegratorSettings& settings);

struct KinematicsSample {
  double s = 0.0;
  double speed = 0.0;
  double speed_dot = 0.0;
  double kappa = 0.0;
  double a_tangential = 0.0;
  double a_centripetal = 0.0;
  double residual = 0.0;   // | a - vdot t - kappa v^2 n |
  bool degenerate = false; // kappa below tolerance, normal direction undefined
};

/// Second-difference kinematics of the sampled positions: speed, its rate,
/// curvature kappa = |a_perp| / v^2, and the tangential/centripetal split.
/// Needs at least 3 samples with a uniform parameter step.
std::vector<KinematicsSample> kinematics_decompose(const Trajectory& traj,
                                                   const MetricSpec& metric,
                                                   double degenerate_tol = 1e-8);

struct NormalitySample {
  double s = 0.0;
  double ivarpi_norm = 0.0;  // |i_v varpi| in the adapted frame
  double speed_dot = 0.0;
  bool normal = false;
};

struct NormalityReport {
  std::vector<NormalitySample> samples;
  bool normal = false;  // all samples pass
  double max_ivarpi = 0.0;
  double max_speed_dot = 0.0;
};

/// A trajectory is a normal curve when at every sample the tangential
/// contraction i_v varpi vanishes and the speed is constant (both under tol).
NormalityReport normality_check(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                const Trajectory& traj, double tol = 1e-6);

/// Follow the unit eigenvector field of the restricted shape operator for
/// the eigenvalue with the given ascending index. Signs are continued by
/// maximizing the dot product with the previous direction. When the followed
/// eigenvalue gets within gap_tol of another, integration stops and the
/// partial trajectory is flagged (at an umbilic point this happens at step
/// 0).
Trajectory line_of_curvature_integrate(const CovectorFieldSpec& spec,
                                       const MetricSpec& metric, const Eigen::VectorXd& x0,
                                       int eigen_index, const IntegratorSettings& settings,
                                       double gap_tol = 1e-8);

}  // namespace pfgeom
