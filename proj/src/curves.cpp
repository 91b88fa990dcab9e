#include "pfgeom/curves.hpp"

#include <cmath>

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

constexpr double kBlowupLimit = 1e12;
constexpr double kInitialDriftTol = 1e-10;

double metric_speed(const MetricSpec& metric, const Eigen::VectorXd& v) {
  return std::sqrt(std::abs(metric.pair_vectors(v, v)));
}

void check_blowup(const Eigen::VectorXd& x, const Eigen::VectorXd& v, double lambda) {
  if (x.cwiseAbs().maxCoeff() > kBlowupLimit || v.cwiseAbs().maxCoeff() > kBlowupLimit ||
      std::abs(lambda) > kBlowupLimit)
    throw Error(ErrorKind::NumericalBlowup, "trajectory state exceeded 1e12");
}

TrajectoryState make_state(const CovectorFieldSpec& spec, const MetricSpec& metric, double s,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& v, double lambda) {
  TrajectoryState st;
  st.s = s;
  st.x = x;
  st.v = v;
  st.lambda = lambda;
  const UnitNormal unit = metric_dual_unit(spec.eval(x), metric);
  st.drift = std::abs(unit.n_cov.dot(v));
  st.speed = metric_speed(metric, v);
  return st;
}

struct Derivative {
  Eigen::VectorXd dx;
  Eigen::VectorXd dv;
  double dlambda = 0.0;
};

Derivative rhs(const CovectorFieldSpec& spec, const MetricSpec& metric, CurveKind kind,
               const Eigen::VectorXd& x, const Eigen::VectorXd& v, double lambda) {
  Derivative d;
  d.dx = v;
  if (kind == CurveKind::normal_curve) {
    d.dv = normal_curve_rhs(spec, metric, x, v);
    d.dlambda = 0.0;
  } else {
    GeodesicRhs g = constrained_geodesic_rhs(spec, metric, x, v, lambda);
    d.dv = std::move(g.acceleration);
    d.dlambda = g.dlambda;
  }
  return d;
}

}  // namespace

void IntegratorSettings::validate() const {
  if (step <= 0.0) throw Error(ErrorKind::ConfigError, "integrator step must be > 0");
  if (steps < 1) throw Error(ErrorKind::ConfigError, "integrator steps must be >= 1");
  if (step * static_cast<double>(steps) > parameter_ceiling)
    throw Error(ErrorKind::ConfigError, "step * steps exceeds the parameter ceiling");
}

double Trajectory::max_drift() const {
  double m = 0.0;
  for (const auto& st : states) m = std::max(m, st.drift);
  return m;
}

Eigen::VectorXd normal_curve_rhs(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  const PointGeometry geom = differential_split(spec, metric, x);
  const double hvv = geom.h_form(v, v);
  return -hvv * geom.n_vec;
}

GeodesicRhs constrained_geodesic_rhs(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                     const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                     double lambda) {
  const PointGeometry geom = differential_split(spec, metric, x);
  const Eigen::VectorXd w_v = geom.antisym * v;          // (W v)_j = W_jk v^k
  const double n_w_v = geom.n_vec.dot(w_v);              // N^j W_jk v^k
  GeodesicRhs out;
  out.dlambda = geom.sign * (geom.h_form(v, v) - lambda * n_w_v);
  out.acceleration = -out.dlambda * geom.n_vec - lambda * metric.raise(w_v);
  return out;
}

Trajectory integrate(const CovectorFieldSpec& spec, const MetricSpec& metric, CurveKind kind,
                     const Eigen::VectorXd& x0, const Eigen::VectorXd& v0, double lambda0,
                     const IntegratorSettings& settings) {
  settings.validate();
  if (x0.size() != spec.dim() || v0.size() != spec.dim())
    throw Error(ErrorKind::ConfigError, "initial state dimension mismatch");

  Trajectory traj;
  traj.dim = spec.dim();
  traj.kind = kind == CurveKind::normal_curve ? "normal_curve" : "geodesic";
  traj.step = settings.step;
  traj.steps = settings.steps;
  traj.velocity_projection = settings.velocity_projection;
  traj.states.reserve(static_cast<size_t>(settings.steps) + 1);

  Eigen::VectorXd x = x0;
  Eigen::VectorXd v = v0;
  double lambda = lambda0;

  {
    const PointGeometry geom = differential_split(spec, metric, x);
    if (settings.velocity_projection)
      v -= geom.sign * geom.n_cov.dot(v) * geom.n_vec;
    if (settings.renormalize_speed) {
      const double speed = metric_speed(metric, v);
      if (speed == 0.0)
        throw Error(ErrorKind::ConfigError, "cannot renormalize a null initial velocity");
      v /= speed;
    }
    const double speed = metric_speed(metric, v);
    if (std::abs(geom.n_cov.dot(v)) > kInitialDriftTol * std::max(1.0, speed))
      throw Error(ErrorKind::ConfigError,
                  "initial velocity violates the constraint N(v) = 0");
  }

  traj.states.push_back(make_state(spec, metric, 0.0, x, v, lambda));

  const double h = settings.step;
  for (long n = 0; n < settings.steps; ++n) {
    try {
      const Derivative k1 = rhs(spec, metric, kind, x, v, lambda);
      const Derivative k2 = rhs(spec, metric, kind, x + 0.5 * h * k1.dx, v + 0.5 * h * k1.dv,
                                lambda + 0.5 * h * k1.dlambda);
      const Derivative k3 = rhs(spec, metric, kind, x + 0.5 * h * k2.dx, v + 0.5 * h * k2.dv,
                                lambda + 0.5 * h * k2.dlambda);
      const Derivative k4 =
          rhs(spec, metric, kind, x + h * k3.dx, v + h * k3.dv, lambda + h * k3.dlambda);

      x += (h / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
      v += (h / 6.0) * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
      lambda += (h / 6.0) * (k1.dlambda + 2.0 * k2.dlambda + 2.0 * k3.dlambda + k4.dlambda);
      check_blowup(x, v, lambda);

      if (settings.velocity_projection) {
        const PointGeometry geom = differential_split(spec, metric, x);
        const double speed_before = metric_speed(metric, v);
        Eigen::VectorXd projected = v - geom.sign * geom.n_cov.dot(v) * geom.n_vec;
        const double speed_after = metric_speed(metric, projected);
        if (speed_after > 0.0) v = projected * (speed_before / speed_after);
      }

      traj.states.push_back(
          make_state(spec, metric, (n + 1) * h, x, v, lambda));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NullNormal || e.kind() == ErrorKind::ZeroForm) {
        traj.status = TrajectoryStatus::aborted_null_normal;
        traj.message = e.what();
        return traj;
      }
      throw;
    }
  }
  return traj;
}

std::vector<KinematicsSample> kinematics_decompose(const Trajectory& traj,
                                                   const MetricSpec& metric,
                                                   double degenerate_tol) {
  const long m = static_cast<long>(traj.states.size());
  if (m < 3)
    throw Error(ErrorKind::ConfigError, "kinematics needs at least 3 samples");
  const double h = traj.states[1].s - traj.states[0].s;

  auto pos = [&](long i) -> const Eigen::VectorXd& { return traj.states[static_cast<size_t>(i)].x; };

  std::vector<Eigen::VectorXd> vel(static_cast<size_t>(m)), acc(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (i == 0)
      vel[0] = (-3.0 * pos(0) + 4.0 * pos(1) - pos(2)) / (2.0 * h);
    else if (i == m - 1)
      vel[static_cast<size_t>(i)] = (3.0 * pos(i) - 4.0 * pos(i - 1) + pos(i - 2)) / (2.0 * h);
    else
      vel[static_cast<size_t>(i)] = (pos(i + 1) - pos(i - 1)) / (2.0 * h);
  }
  for (long i = 0; i < m; ++i) {
    if (i == 0) {
      if (m >= 4)
        acc[0] = (2.0 * pos(0) - 5.0 * pos(1) + 4.0 * pos(2) - pos(3)) / (h * h);
      else
        acc[0] = (pos(0) - 2.0 * pos(1) + pos(2)) / (h * h);
    } else if (i == m - 1) {
      if (m >= 4)
        acc[static_cast<size_t>(i)] =
            (2.0 * pos(i) - 5.0 * pos(i - 1) + 4.0 * pos(i - 2) - pos(i - 3)) / (h * h);
      else
        acc[static_cast<size_t>(i)] = (pos(i) - 2.0 * pos(i - 1) + pos(i - 2)) / (h * h);
    } else {
      acc[static_cast<size_t>(i)] = (pos(i + 1) - 2.0 * pos(i) + pos(i - 1)) / (h * h);
    }
  }

  std::vector<double> speed(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) speed[static_cast<size_t>(i)] = metric_speed(metric, vel[static_cast<size_t>(i)]);

  std::vector<KinematicsSample> out(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    KinematicsSample& k = out[static_cast<size_t>(i)];
    k.s = traj.states[static_cast<size_t>(i)].s;
    k.speed = speed[static_cast<size_t>(i)];
    if (i == 0)
      k.speed_dot = (-3.0 * speed[0] + 4.0 * speed[1] - speed[2]) / (2.0 * h);
    else if (i == m - 1)
      k.speed_dot = (3.0 * speed[static_cast<size_t>(i)] - 4.0 * speed[static_cast<size_t>(i - 1)] +
                     speed[static_cast<size_t>(i - 2)]) /
                    (2.0 * h);
    else
      k.speed_dot =
          (speed[static_cast<size_t>(i + 1)] - speed[static_cast<size_t>(i - 1)]) / (2.0 * h);

    const Eigen::VectorXd& v = vel[static_cast<size_t>(i)];
    const Eigen::VectorXd& a = acc[static_cast<size_t>(i)];
    if (k.speed == 0.0)
      throw Error(ErrorKind::DegenerateCurve, "zero velocity sample in kinematics");
    const Eigen::VectorXd t_hat = v / k.speed;
    const double gtt = metric.pair_vectors(t_hat, t_hat);  // +/-1
    const double a_par = metric.pair_vectors(a, t_hat) / gtt;
    const Eigen::VectorXd a_perp = a - a_par * t_hat;
    const double a_perp_norm = metric_speed(metric, a_perp);
    k.kappa = a_perp_norm / (k.speed * k.speed);
    k.a_tangential = a_par;
    k.a_centripetal = a_perp_norm;
    k.degenerate = k.kappa < degenerate_tol;
    // residual of a = vdot t + kappa v^2 n with the measured pieces
    const Eigen::VectorXd recon = k.speed_dot * t_hat + a_perp;
    k.residual = metric_speed(metric, a - recon);
  }
  return out;
}

NormalityReport normality_check(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                const Trajectory& traj, double tol) {
  const long m = static_cast<long>(traj.states.size());
  if (m < 3)
    throw Error(ErrorKind::ConfigError, "normality check needs at least 3 samples");
  const double h = traj.states[1].s - traj.states[0].s;

  NormalityReport report;
  report.samples.resize(static_cast<size_t>(m));
  report.normal = true;
  for (long i = 0; i < m; ++i) {
    const TrajectoryState& st = traj.states[static_cast<size_t>(i)];
    NormalitySample& sample = report.samples[static_cast<size_t>(i)];
    sample.s = st.s;

    const PointGeometry geom = differential_split(spec, metric, st.x);
    const AdaptedFrame frame = adapted_frame(geom, metric);
    const OmegaSplit split = omega_decompose(geom, frame);
    const Eigen::VectorXd v_frame = frame.to_frame(st.v);
    sample.ivarpi_norm = (split.varpi.transpose() * v_frame).norm();

    auto spd = [&](long j) { return traj.states[static_cast<size_t>(j)].speed; };
    if (i == 0)
      sample.speed_dot = (-3.0 * spd(0) + 4.0 * spd(1) - spd(2)) / (2.0 * h);
    else if (i == m - 1)
      sample.speed_dot = (3.0 * spd(i) - 4.0 * spd(i - 1) + spd(i - 2)) / (2.0 * h);
    else
      sample.speed_dot = (spd(i + 1) - spd(i - 1)) / (2.0 * h);

    sample.normal = sample.ivarpi_norm < tol && std::abs(sample.speed_dot) < tol;
    report.normal = report.normal && sample.normal;
    report.max_ivarpi = std::max(report.max_ivarpi, sample.ivarpi_norm);
    report.max_speed_dot = std::max(report.max_speed_dot, std::abs(sample.speed_dot));
  }
  return report;
}

namespace {

struct EigenDirection {
  Eigen::VectorXd direction;  // ambient, unit
  double gap = 0.0;
  double spectral_radius = 0.0;
};

EigenDirection eigen_direction(const CovectorFieldSpec& spec, const MetricSpec& metric,
                               const Eigen::VectorXd& x, int eigen_index,
                               const Eigen::VectorXd* previous) {
  const PointGeometry geom = differential_split(spec, metric, x);
  const AdaptedFrame frame = adapted_frame(geom, metric);
  const Eigen::MatrixXd hbar = second_fundamental_restricted(geom, frame);
  const int n = frame.n();
  if (eigen_index < 0 || eigen_index >= n)
    throw Error(ErrorKind::ConfigError, "eigenvalue index out of range");

  bool definite = true;
  for (int a = 0; a < n; ++a)
    if (frame.signs[a] != frame.signs[0]) definite = false;
  if (!definite)
    throw Error(ErrorKind::DegenerateTangentMetric,
                "lines of curvature need a definite restricted metric");

  // with g = signs[0] * I on the frame, the shape operator is s * hbar
  const double s = frame.signs[0];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s * hbar);
  const Eigen::VectorXd values = eig.eigenvalues();  // ascending
  const Eigen::MatrixXd vectors = eig.eigenvectors();
  const int index = eigen_index;

  EigenDirection out;
  out.spectral_radius = values.cwiseAbs().maxCoeff();
  out.gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j)
    if (j != index) out.gap = std::min(out.gap, std::abs(values[index] - values[j]));
  out.direction = frame.to_ambient(vectors.col(index));
  if (previous != nullptr && previous->dot(out.direction) < 0.0) out.direction = -out.direction;
  else if (previous == nullptr) {
    // deterministic base sign: first nonzero component positive
    for (int i = 0; i < out.direction.size(); ++i) {
      if (out.direction[i] != 0.0) {
        if (out.direction[i] < 0.0) out.direction = -out.direction;
        break;
      }
    }
  }
  return out;
}

}  // namespace

Trajectory line_of_curvature_integrate(const CovectorFieldSpec& spec, const MetricSpec& metric,
                                       const Eigen::VectorXd& x0, int eigen_index,
                                       const IntegratorSettings& settings, double gap_tol) {
  settings.validate();
  Trajectory traj;
  traj.dim = spec.dim();
  traj.kind = "line_of_curvature";
  traj.step = settings.step;
  traj.steps = settings.steps;

  Eigen::VectorXd x = x0;
  Eigen::VectorXd prev_dir;
  const double h = settings.step;

  auto collided = [&](const EigenDirection& e) {
    return e.gap < gap_tol * std::max(1.0, e.spectral_radius);
  };

  EigenDirection here = eigen_direction(spec, metric, x, eigen_index, nullptr);
  traj.states.push_back(make_state(spec, metric, 0.0, x, here.direction, 0.0));
  if (collided(here)) {
    traj.status = TrajectoryStatus::stopped_eigenvalue_collision;
    traj.message = "followed eigenvalue is not simple at the start point";
    return traj;
  }
  prev_dir = here.direction;

  for (long n = 0; n < settings.steps; ++n) {
    try {
      auto dir_at = [&](const Eigen::VectorXd& p) {
        EigenDirection e = eigen_direction(spec, metric, p, eigen_index, &prev_dir);
        if (collided(e))
          throw Error(ErrorKind::DegenerateCurve, "eigenvalue collision along the curve");
        return e.direction;
      };
      const Eigen::VectorXd k1 = dir_at(x);
      const Eigen::VectorXd k2 = dir_at(x + 0.5 * h * k1);
      const Eigen::VectorXd k3 = dir_at(x + 0.5 * h * k2);
      const Eigen::VectorXd k4 = dir_at(x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      check_blowup(x, k1, 0.0);
      EigenDirection next = eigen_direction(spec, metric, x, eigen_index, &prev_dir);
      if (collided(next))
        throw Error(ErrorKind::DegenerateCurve, "eigenvalue collision along the curve");
      prev_dir = next.direction;
      traj.states.push_back(make_state(spec, metric, (n + 1) * h, x, next.direction, 0.0));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateCurve) {
        traj.status = TrajectoryStatus::stopped_eigenvalue_collision;
        traj.message = e.detail();
        return traj;
      }
      if (e.kind() == ErrorKind::NullNormal || e.kind() == ErrorKind::ZeroForm) {
        traj.status = TrajectoryStatus::aborted_null_normal;
        traj.message = e.what();
        return traj;
      }
      throw;
    }
  }
  return traj;
}

}  // namespace pfgeom
