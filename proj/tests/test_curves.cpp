#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "pfgeom/covector_field.hpp"
#include "pfgeom/curves.hpp"
#include "pfgeom/error.hpp"
#include "pfgeom/point_geometry.hpp"

using namespace pfgeom;

namespace {

Eigen::VectorXd v3(double a, double b, double c) {
  Eigen::VectorXd x(3);
  x << a, b, c;
  return x;
}

// unit tangent obtained by projecting a seed direction onto the hyperplane
Eigen::VectorXd tangent_at(const CovectorFieldSpec& spec, const MetricSpec& metric,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& seed) {
  const PointGeometry g = differential_split(spec, metric, x);
  Eigen::VectorXd v = seed - g.sign * g.n_cov.dot(seed) * g.n_vec;
  return v / std::sqrt(std::abs(metric.pair_vectors(v, v)));
}

}  // namespace

TEST_CASE("normal curve acceleration") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);

  CHECK(normal_curve_rhs(sphere, metric, v3(1, 0, 0), v3(0, 1, 0)).isApprox(v3(-1, 0, 0)));

  const auto lin = CovectorFieldSpec::linear(3);
  CHECK(normal_curve_rhs(lin, metric, v3(0.5, 2, -1), v3(0.3, -0.4, 0)).cwiseAbs().maxCoeff() ==
        0.0);

  const auto contact = CovectorFieldSpec::contact();
  CHECK(normal_curve_rhs(contact, metric, v3(0, 0, 0), v3(1, 0, 0)).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("constrained geodesic right-hand side") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);

  // closed field: the multiplier closure reduces to dl/ds = H(v, v) and the
  // acceleration coincides with the normal-curve one at lambda = 0
  const auto g = constrained_geodesic_rhs(sphere, metric, v3(1, 0, 0), v3(0, 1, 0), 0.0);
  CHECK(g.dlambda == doctest::Approx(1.0));
  CHECK(g.acceleration.isApprox(v3(-1, 0, 0)));

  const auto lin = constrained_geodesic_rhs(CovectorFieldSpec::linear(3), metric,
                                            v3(1, 2, 3), v3(0.7, -0.1, 0), 0.4);
  CHECK(lin.dlambda == 0.0);
  CHECK(lin.acceleration.cwiseAbs().maxCoeff() == 0.0);

  // nonintegrable field: the vorticity term is tangential
  const auto con = constrained_geodesic_rhs(CovectorFieldSpec::contact(), metric,
                                            v3(0, 0, 0), v3(1, 0, 0), 0.5);
  CHECK(con.dlambda == doctest::Approx(0.0));
  CHECK(con.acceleration.isApprox(v3(0, 0.5, 0)));
}

TEST_CASE("great circles: normal curve integration hits the antipode") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  IntegratorSettings settings;
  settings.steps = 3142;
  settings.step = M_PI / 3142.0;

  const auto traj = integrate(sphere, metric, CurveKind::normal_curve, v3(1, 0, 0),
                              v3(0, 1, 0), 0.0, settings);
  REQUIRE(traj.status == TrajectoryStatus::ok);
  REQUIRE(traj.states.size() == 3143);
  CHECK((traj.back().x - v3(-1, 0, 0)).norm() < 1e-5);
  CHECK(traj.max_drift() < 1e-7);
  for (const auto& st : traj.states) CHECK(std::abs(st.speed - 1.0) < 1e-6);
}

TEST_CASE("geodesics coincide with normal curves on the integrable case") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  IntegratorSettings settings;
  settings.steps = 1571;
  settings.step = (M_PI / 2.0) / 1571.0;

  const auto normal = integrate(sphere, metric, CurveKind::normal_curve, v3(1, 0, 0),
                                v3(0, 1, 0), 0.0, settings);
  const auto geo = integrate(sphere, metric, CurveKind::geodesic, v3(1, 0, 0), v3(0, 1, 0),
                             0.0, settings);
  REQUIRE(normal.states.size() == geo.states.size());
  double max_dist = 0.0;
  for (size_t i = 0; i < normal.states.size(); ++i)
    max_dist = std::max(max_dist, (normal.states[i].x - geo.states[i].x).norm());
  CHECK(max_dist < 1e-6);

  // along the way the recorded multiplier rate equals H(v, v)
  for (size_t i = 0; i < geo.states.size(); i += 100) {
    const auto& st = geo.states[i];
    const auto rhs = constrained_geodesic_rhs(sphere, metric, st.x, st.v, st.lambda);
    const auto g = differential_split(sphere, metric, st.x);
    CHECK(std::abs(rhs.dlambda - g.h_form(st.v, st.v)) < 1e-9);
  }
}

TEST_CASE("contact geodesics stay on the constraint but are not normal curves") {
  const auto metric = MetricSpec::euclidean(3);
  const auto contact = CovectorFieldSpec::contact();
  const Eigen::VectorXd x0 = v3(0.3, 0.2, 0.1);
  const Eigen::VectorXd v0 = tangent_at(contact, metric, x0, v3(1.0, 0.4, 0.0));

  IntegratorSettings settings;
  settings.steps = 10000;
  settings.step = 1e-3;

  const auto traj = integrate(contact, metric, CurveKind::geodesic, x0, v0, 0.0, settings);
  REQUIRE(traj.status == TrajectoryStatus::ok);
  CHECK(traj.max_drift() < 1e-7);
  for (const auto& st : traj.states) CHECK(std::abs(st.speed - 1.0) < 1e-6);

  const auto report = normality_check(contact, metric, traj, 1e-6);
  CHECK_FALSE(report.normal);
  CHECK(report.max_ivarpi > 0.1);

  // with projection the drift is pinned to rounding level
  IntegratorSettings projected = settings;
  projected.velocity_projection = true;
  const auto traj_p =
      integrate(contact, metric, CurveKind::geodesic, x0, v0, 0.0, projected);
  CHECK(traj_p.max_drift() < 1e-12);
}

TEST_CASE("sphere geodesics are normal curves") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  IntegratorSettings settings;
  settings.steps = 2000;
  settings.step = 1e-3;
  const auto traj = integrate(sphere, metric, CurveKind::geodesic, v3(0, 0, 1.5),
                              v3(0, 1, 0), 0.0, settings);
  const auto report = normality_check(sphere, metric, traj, 1e-6);
  CHECK(report.normal);
  CHECK(report.max_ivarpi < 1e-12);
}

TEST_CASE("vorticity kernel directions exist for n > 2") {
  // N = dx0 + x1 dx2 on R^5: the tangential vorticity annihilates the last
  // two axes, so a velocity there passes the pointwise normality test
  const auto metric = MetricSpec::euclidean(5);
  const auto spec = CovectorFieldSpec::darboux(1, 5);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(5);
  Eigen::VectorXd v0 = Eigen::VectorXd::Zero(5);
  v0[3] = 1.0;

  IntegratorSettings settings;
  settings.steps = 10;
  settings.step = 1e-3;
  const auto traj = integrate(spec, metric, CurveKind::geodesic, x0, v0, 0.0, settings);
  const auto report = normality_check(spec, metric, traj, 1e-9);
  CHECK(report.samples.front().ivarpi_norm < 1e-12);
  CHECK(report.normal);

  // a generic tangent direction does not lie in the kernel
  Eigen::VectorXd v1 = Eigen::VectorXd::Zero(5);
  v1[1] = 1.0;
  const auto traj2 = integrate(spec, metric, CurveKind::geodesic, x0, v1, 0.0, settings);
  const auto report2 = normality_check(spec, metric, traj2, 1e-9);
  CHECK(report2.samples.front().ivarpi_norm > 0.1);
}

TEST_CASE("normal curvature along in-surface curves matches the restricted form") {
  // differentiating N(v) = 0 forces the normal part of the measured
  // curvature vector to equal -H(v, v), whatever the dynamics
  const auto metric = MetricSpec::euclidean(3);
  IntegratorSettings settings;
  settings.steps = 2000;
  settings.step = 1e-3;
  const struct {
    CovectorFieldSpec spec;
    Eigen::VectorXd x0;
    Eigen::VectorXd seed;
  } cases[] = {
      {CovectorFieldSpec::exact_sphere(3), v3(1, 0, 0), v3(0, 1, 0)},
      {CovectorFieldSpec::contact(), v3(0.3, 0.2, 0.1), v3(1.0, 0.4, 0.0)},
  };
  for (const auto& c : cases) {
    const Eigen::VectorXd v0 = tangent_at(c.spec, metric, c.x0, c.seed);
    const auto traj = integrate(c.spec, metric, CurveKind::geodesic, c.x0, v0, 0.0, settings);
    const double h = settings.step;
    for (size_t i = 100; i + 100 < traj.states.size(); i += 250) {
      const Eigen::VectorXd accel =
          (traj.states[i + 1].x - 2.0 * traj.states[i].x + traj.states[i - 1].x) / (h * h);
      const auto g = differential_split(c.spec, metric, traj.states[i].x);
      const double normal_part = g.sign * metric.pair_vectors(accel, g.n_vec);
      CHECK(std::abs(normal_part + g.h_form(traj.states[i].v, traj.states[i].v)) < 1e-4);
    }
  }
}

TEST_CASE("kinematics of uniform circular motion") {
  // x(t) = (r cos wt, r sin wt, 0), r = 2, w = 3
  const double r = 2.0, w = 3.0, h = 1e-3;
  const long steps = 2000;
  Trajectory traj;
  traj.dim = 3;
  traj.kind = "samples";
  for (long i = 0; i <= steps; ++i) {
    TrajectoryState st;
    st.s = i * h;
    st.x = v3(r * std::cos(w * st.s), r * std::sin(w * st.s), 0.0);
    st.v = v3(-r * w * std::sin(w * st.s), r * w * std::cos(w * st.s), 0.0);
    traj.states.push_back(st);
  }
  const auto metric = MetricSpec::euclidean(3);
  const auto kin = kinematics_decompose(traj, metric);
  for (size_t i = 100; i + 100 < kin.size(); i += 200) {
    CHECK(kin[i].speed == doctest::Approx(r * w).epsilon(1e-5));
    CHECK(std::abs(kin[i].speed_dot) < 1e-4);
    CHECK(kin[i].kappa == doctest::Approx(1.0 / r).epsilon(1e-5));
    CHECK(kin[i].a_centripetal == doctest::Approx(r * w * w).epsilon(1e-5));
    CHECK(std::abs(kin[i].a_tangential) < 1e-4);
    CHECK(kin[i].residual < 1e-4);
    CHECK_FALSE(kin[i].degenerate);
  }
}

TEST_CASE("kinematics flags straight lines as degenerate") {
  Trajectory traj;
  traj.dim = 3;
  const double h = 1e-2;
  for (long i = 0; i <= 100; ++i) {
    TrajectoryState st;
    st.s = i * h;
    st.x = v3(0.1, -0.2, 0.3) + st.s * v3(0.5, 1.0, -0.25);
    traj.states.push_back(st);
  }
  const auto kin = kinematics_decompose(traj, MetricSpec::euclidean(3));
  for (size_t i = 1; i + 1 < kin.size(); ++i) CHECK(kin[i].degenerate);
}

TEST_CASE("kinematics of an integrated great circle") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  IntegratorSettings settings;
  settings.steps = 3000;
  settings.step = 1e-3;
  const auto traj = integrate(sphere, metric, CurveKind::normal_curve, v3(1, 0, 0),
                              v3(0, 1, 0), 0.0, settings);
  const auto kin = kinematics_decompose(traj, metric);
  for (size_t i = 50; i + 50 < kin.size(); i += 500) {
    CHECK(std::abs(kin[i].kappa - 1.0) < 1e-4);
    CHECK(std::abs(kin[i].speed - 1.0) < 1e-6);
  }
  CHECK_THROWS_AS((void)kinematics_decompose(Trajectory{}, metric), Error);
}

TEST_CASE("integration step halving shows fourth-order convergence") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  auto endpoint_error = [&](long steps) {
    IntegratorSettings settings;
    settings.steps = steps;
    settings.step = M_PI / static_cast<double>(steps);
    const auto traj = integrate(sphere, metric, CurveKind::normal_curve, v3(1, 0, 0),
                                v3(0, 1, 0), 0.0, settings);
    return (traj.back().x - v3(-1, 0, 0)).norm();
  };
  const double e1 = endpoint_error(64);
  const double e2 = endpoint_error(128);
  const double ratio = e1 / e2;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("integrator guards") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  IntegratorSettings bad;
  bad.step = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  IntegratorSettings runaway;
  runaway.step = 10.0;
  runaway.steps = 100000;
  CHECK_THROWS_AS(runaway.validate(), Error);

  IntegratorSettings ok;
  ok.steps = 10;
  // velocity that violates the constraint is rejected up front
  CHECK_THROWS_AS((void)integrate(sphere, metric, CurveKind::geodesic, v3(1, 0, 0),
                                  v3(1, 1, 0), 0.0, ok),
                  Error);
  // but projection repairs it
  IntegratorSettings proj = ok;
  proj.velocity_projection = true;
  const auto traj = integrate(sphere, metric, CurveKind::geodesic, v3(1, 0, 0), v3(1, 1, 0),
                              0.0, proj);
  CHECK(traj.states.front().drift < 1e-12);

  // gigantic velocities blow up the state cap
  IntegratorSettings one;
  one.steps = 1;
  one.step = 1.0;
  CHECK_THROWS_AS((void)integrate(sphere, metric, CurveKind::normal_curve, v3(1, 0, 0),
                                  v3(0, 1e11, 0), 0.0, one),
                  Error);
}

TEST_CASE("renormalize_speed rescales the start velocity") {
  const auto metric = MetricSpec::euclidean(3);
  const auto sphere = CovectorFieldSpec::exact_sphere(3);
  IntegratorSettings settings;
  settings.steps = 5;
  settings.renormalize_speed = true;
  const auto traj = integrate(sphere, metric, CurveKind::normal_curve, v3(1, 0, 0),
                              v3(0, 2.5, 0), 0.0, settings);
  CHECK(traj.states.front().speed == doctest::Approx(1.0));
}

TEST_CASE("lines of curvature stop immediately at umbilic points") {
  const auto metric = MetricSpec::euclidean(3);
  IntegratorSettings settings;
  settings.steps = 100;
  settings.step = 1e-2;
  const auto traj = line_of_curvature_integrate(CovectorFieldSpec::exact_sphere(3), metric,
                                                v3(0, 0, 2), 0, settings);
  CHECK(traj.status == TrajectoryStatus::stopped_eigenvalue_collision);
  CHECK(traj.states.size() == 1);
}

TEST_CASE("lines of curvature follow axis-aligned principal directions") {
  // level sets of phi = 0.4 x^2 + 0.15 y^2 + z have distinct principal
  // curvatures; on the y = 0 slice the principal directions split into the
  // y-axis and the x-z plane, so the in-plane line of curvature stays there
  const int dim = 3;
  Polynomial phi = Polynomial::monomial(dim, 0.4, {2, 0, 0}) +
                   Polynomial::monomial(dim, 0.15, {0, 2, 0}) +
                   Polynomial::coordinate(dim, 2);
  std::vector<Polynomial> comps;
  for (int i = 0; i < dim; ++i) comps.push_back(phi.derivative(i));
  const CovectorFieldSpec spec(std::move(comps), "paraboloid");
  const auto metric = MetricSpec::euclidean(3);

  IntegratorSettings settings;
  settings.steps = 400;
  settings.step = 1e-3;
  const auto traj =
      line_of_curvature_integrate(spec, metric, v3(0.2, 0.0, 0.5), 1, settings);
  REQUIRE(traj.status == TrajectoryStatus::ok);
  for (const auto& st : traj.states) {
    CHECK(std::abs(st.x[1]) < 1e-9);
    CHECK(st.drift < 1e-7);
  }
  CHECK(std::abs(traj.back().x[0] - 0.2) > 0.1);  // it actually moves
}

TEST_CASE("lines of curvature on the contact structure") {
  const auto metric = MetricSpec::euclidean(3);
  IntegratorSettings settings;
  settings.steps = 500;
  settings.step = 1e-3;
  const auto traj = line_of_curvature_integrate(CovectorFieldSpec::contact(), metric,
                                                v3(0, 1, 0), 0, settings);
  REQUIRE(traj.status == TrajectoryStatus::ok);
  REQUIRE(traj.states.size() == 501);
  for (const auto& st : traj.states) CHECK(st.drift < 1e-7);
}
