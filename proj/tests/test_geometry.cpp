#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "pfgeom/covector_field.hpp"
#include "pfgeom/curvature.hpp"
#include "pfgeom/error.hpp"
#include "pfgeom/frame.hpp"
#include "pfgeom/point_geometry.hpp"
#include "test_oracles.hpp"

using namespace pfgeom;

namespace {

Eigen::VectorXd v3(double a, double b, double c) {
  Eigen::VectorXd x(3);
  x << a, b, c;
  return x;
}

Eigen::VectorXd v2(double a, double b) {
  Eigen::VectorXd x(2);
  x << a, b;
  return x;
}

}  // namespace

TEST_CASE("projectors split axis-aligned vectors") {
  const auto metric = MetricSpec::euclidean(3);
  const auto g = differential_split(CovectorFieldSpec::linear(3), metric, v3(0.4, 2.0, -1.0));
  const auto [p_t, p_n] = tangent_projectors(g);
  const Eigen::VectorXd v = v3(1, 2, 3);
  CHECK((p_t * v).isApprox(v3(1, 2, 0)));
  CHECK((p_n * v).isApprox(v3(0, 0, 3)));
}

TEST_CASE("projector algebra") {
  const auto metric = MetricSpec::euclidean(3);
  const auto g = differential_split(CovectorFieldSpec::contact(), metric, v3(0, 1, 0));
  const auto [p_t, p_n] = tangent_projectors(g);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
  CHECK(oracle::max_abs_diff(p_t * p_t, p_t) < 1e-12);
  CHECK(oracle::max_abs_diff(p_n * p_n, p_n) < 1e-12);
  CHECK((p_t * p_n).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(oracle::max_abs_diff(p_t + p_n, id) < 1e-12);
}

TEST_CASE("projector algebra holds with indefinite metrics and timelike normals") {
  // under diag[1,-1,-1,-1] the normal dx^1 has g(N, N) = -1; the sign factor
  // in P_n keeps both operators idempotent
  const auto metric = MetricSpec::minkowski();
  std::vector<Polynomial> comps(4, Polynomial::zero(4));
  comps[1] = Polynomial::constant(4, 1.0);
  const CovectorFieldSpec spec(std::move(comps), "dx1");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  const auto g = differential_split(spec, metric, x);
  CHECK(g.sign == -1.0);
  const auto [p_t, p_n] = tangent_projectors(g);
  CHECK(oracle::max_abs_diff(p_n * p_n, p_n) < 1e-12);
  CHECK(oracle::max_abs_diff(p_t * p_t, p_t) < 1e-12);
  // N(P_t v) = 0
  Eigen::VectorXd v(4);
  v << 0.3, -1.2, 0.7, 2.0;
  CHECK(std::abs(g.n_cov.dot(p_t * v)) < 1e-12);
}

TEST_CASE("tangent projector has rank n at random points of every catalog form") {
  std::mt19937 rng(12);
  const auto metric = MetricSpec::euclidean(3);
  for (const auto& spec : {CovectorFieldSpec::exact_sphere(3), CovectorFieldSpec::linear(3),
                           CovectorFieldSpec::integrating_factor_default(3),
                           CovectorFieldSpec::contact(), CovectorFieldSpec::darboux(1, 3)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::VectorXd x = oracle::random_shell_point(3, rng);
      const auto g = differential_split(spec, metric, x);
      const auto [p_t, p_n] = tangent_projectors(g);
      CHECK(p_t.trace() == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("adapted frame: axis-aligned cases") {
  const auto metric = MetricSpec::euclidean(3);

  const auto lin = differential_split(CovectorFieldSpec::linear(3), metric, v3(5, 6, 7));
  const auto f1 = adapted_frame(lin, metric);
  CHECK(f1.tangent.col(0).isApprox(v3(1, 0, 0)));
  CHECK(f1.tangent.col(1).isApprox(v3(0, 1, 0)));

  const auto sph =
      differential_split(CovectorFieldSpec::exact_sphere(3), metric, v3(0, 0, 2));
  const auto f2 = adapted_frame(sph, metric);
  // spans the x-y plane, orthonormal
  CHECK(std::abs(f2.tangent(2, 0)) < 1e-14);
  CHECK(std::abs(f2.tangent(2, 1)) < 1e-14);
  CHECK(metric.pair_vectors(f2.tangent.col(0), f2.tangent.col(0)) == doctest::Approx(1.0));
  CHECK(std::abs(metric.pair_vectors(f2.tangent.col(0), f2.tangent.col(1))) < 1e-14);
}

TEST_CASE("adapted frame: contact form invariants") {
  const auto metric = MetricSpec::euclidean(3);
  const auto g = differential_split(CovectorFieldSpec::contact(), metric, v3(0, 1, 0));
  const auto frame = adapted_frame(g, metric);
  for (int a = 0; a < 2; ++a) {
    CHECK(std::abs(g.n_cov.dot(frame.tangent.col(a))) < 1e-12);
    for (int b = 0; b < 2; ++b) {
      const double gab = metric.pair_vectors(frame.tangent.col(a), frame.tangent.col(b));
      CHECK(std::abs(gab - (a == b ? 1.0 : 0.0)) < 1e-12);
      // coframe duality
      CHECK(std::abs(frame.coframe.row(a).dot(frame.tangent.col(b)) - (a == b ? 1.0 : 0.0)) <
            1e-12);
    }
    // coframe annihilates the normal
    CHECK(std::abs(frame.coframe.row(a).dot(frame.n_vec)) < 1e-12);
  }
}

TEST_CASE("restricted second fundamental form") {
  const auto metric = MetricSpec::euclidean(3);

  const auto sph =
      differential_split(CovectorFieldSpec::exact_sphere(3), metric, v3(0, 0, 2));
  const auto hf = second_fundamental_restricted(sph, adapted_frame(sph, metric));
  CHECK(oracle::max_abs_diff(hf, 0.5 * Eigen::MatrixXd::Identity(2, 2)) < 1e-14);

  const auto lin = differential_split(CovectorFieldSpec::linear(3), metric, v3(1, 2, 3));
  const auto hl = second_fundamental_restricted(lin, adapted_frame(lin, metric));
  CHECK(hl.cwiseAbs().maxCoeff() == 0.0);

  const auto con = differential_split(CovectorFieldSpec::contact(), metric, v3(0, 0, 0));
  const auto hc = second_fundamental_restricted(con, adapted_frame(con, metric));
  CHECK(std::abs(hc(0, 0)) < 1e-14);
  CHECK(std::abs(hc(1, 1)) < 1e-14);
  CHECK(hc(0, 1) == doctest::Approx(-0.5));
  CHECK(hc(1, 0) == doctest::Approx(-0.5));
}

TEST_CASE("curvature report: diagonal case") {
  Eigen::MatrixXd h(2, 2);
  h << 2, 0, 0, 3;
  const auto rep = curvature_report(h, Eigen::MatrixXd::Identity(2, 2));
  REQUIRE(rep.real_spectrum);
  CHECK(rep.principal[0] == doctest::Approx(2.0));
  CHECK(rep.principal[1] == doctest::Approx(3.0));
  CHECK(rep.mean_curvature == doctest::Approx(2.5));
  CHECK(rep.gaussian_curvature == doctest::Approx(6.0));
  CHECK(rep.classification == PointClass::elliptic);
  REQUIRE(rep.radii.size() == 2);
  CHECK(rep.radii[0] == doctest::Approx(0.5));
  CHECK(rep.radii[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("curvature report: sphere of radius 2 is umbilic") {
  const auto metric = MetricSpec::euclidean(3);
  const auto spec = CovectorFieldSpec::exact_sphere(3);
  const Eigen::VectorXd x = v3(0, 0, 2);

  const auto rep = curvature_report_at(spec, metric, x);
  REQUIRE(rep.real_spectrum);
  CHECK(std::abs(rep.principal[0] - 0.5) < 1e-8);
  CHECK(std::abs(rep.principal[1] - 0.5) < 1e-8);
  CHECK(rep.classification == PointClass::umbilic);

  const auto rep_fd = curvature_report_at(spec, metric, x, DiffMode::finite_diff);
  CHECK(std::abs(rep_fd.principal[0] - 0.5) < 1e-5);
  CHECK(std::abs(rep_fd.principal[1] - 0.5) < 1e-5);

  // trace identity: n * mean curvature = divergence of the unit normal
  const double div = unit_normal_divergence_fd(spec, metric, x);
  CHECK(std::abs(2.0 * rep.mean_curvature - div) < 1e-6);
}

TEST_CASE("curvature report: contact form at the origin is hyperbolic") {
  const auto metric = MetricSpec::euclidean(3);
  const auto rep = curvature_report_at(CovectorFieldSpec::contact(), metric, v3(0, 0, 0));
  REQUIRE(rep.real_spectrum);
  CHECK(rep.principal[0] == doctest::Approx(-0.5));
  CHECK(rep.principal[1] == doctest::Approx(0.5));
  CHECK(rep.classification == PointClass::hyperbolic);
  CHECK(std::abs(rep.mean_curvature) < 1e-12);
  CHECK(rep.gaussian_curvature == doctest::Approx(-0.25));
}

TEST_CASE("curvature classification edge labels") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK(curvature_report(Eigen::MatrixXd::Zero(2, 2), id).classification == PointClass::flat);
  Eigen::MatrixXd par(2, 2);
  par << 1, 0, 0, 0;
  CHECK(curvature_report(par, id).classification == PointClass::parabolic);
  Eigen::MatrixXd neg = -0.7 * id;
  CHECK(curvature_report(neg, id).classification == PointClass::umbilic);

  // indefinite restricted metric with a rotational shape operator
  Eigen::MatrixXd h(2, 2);
  h << 0, 1, 1, 0;
  Eigen::MatrixXd g(2, 2);
  g << 1, 0, 0, -1;
  const auto rep = curvature_report(h, g);
  CHECK_FALSE(rep.real_spectrum);
  CHECK(rep.classification == PointClass::indefinite_metric);

  CHECK_THROWS_AS((void)curvature_report(h, Eigen::MatrixXd::Zero(2, 2)), Error);
}

TEST_CASE("eigenvalue invariants match trace and determinant") {
  std::mt19937 rng(41);
  const auto metric = MetricSpec::euclidean(3);
  for (const auto& spec : {CovectorFieldSpec::exact_sphere(3), CovectorFieldSpec::contact(),
                           CovectorFieldSpec::darboux(1, 3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Eigen::VectorXd x = oracle::random_shell_point(3, rng);
      const auto g = differential_split(spec, metric, x);
      const auto frame = adapted_frame(g, metric);
      const auto hbar = second_fundamental_restricted(g, frame);
      const auto rep = curvature_report(hbar, frame.restricted_metric());
      REQUIRE(rep.real_spectrum);
      const Eigen::MatrixXd shape = frame.restricted_metric().inverse() * hbar;
      CHECK(std::abs(rep.principal.sum() - shape.trace()) < 1e-10);
      CHECK(std::abs(rep.principal.prod() - shape.determinant()) < 1e-10);
    }
  }
}

TEST_CASE("mean curvature equals divergence over n for integrable fields") {
  std::mt19937 rng(43);
  const auto metric = MetricSpec::euclidean(3);
  for (const auto& spec : {CovectorFieldSpec::exact_sphere(3), CovectorFieldSpec::linear(3),
                           CovectorFieldSpec::integrating_factor_default(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd x = oracle::random_shell_point(3, rng, 1.0, 2.0);
      const auto rep = curvature_report_at(spec, metric, x);
      const double div = unit_normal_divergence_fd(spec, metric, x);
      CHECK(std::abs(2.0 * rep.mean_curvature - div) < 1e-6);
    }
  }
}

TEST_CASE("level sets of a linear function are minimal, spheres are not") {
  const auto metric = MetricSpec::euclidean(3);
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd x = oracle::random_shell_point(3, rng);
    const auto lin = curvature_report_at(CovectorFieldSpec::linear(3), metric, x);
    CHECK(std::abs(lin.mean_curvature) < 1e-10);
  }
  const auto sph = curvature_report_at(CovectorFieldSpec::exact_sphere(3), metric, v3(0, 0, 2));
  CHECK(sph.mean_curvature == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("principal curvatures are frame invariants") {
  std::mt19937 rng(53);
  const auto metric = MetricSpec::euclidean(3);
  for (const auto& spec : {CovectorFieldSpec::contact(), CovectorFieldSpec::exact_sphere(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd x = oracle::random_shell_point(3, rng);
      const auto g = differential_split(spec, metric, x);
      const auto f1 = adapted_frame(g, metric);
      const auto f2 = adapted_frame_ordered(g, metric, {2, 0, 1});
      const auto r1 =
          curvature_report(second_fundamental_restricted(g, f1), f1.restricted_metric());
      const auto r2 =
          curvature_report(second_fundamental_restricted(g, f2), f2.restricted_metric());
      REQUIRE(r1.real_spectrum);
      REQUIRE(r2.real_spectrum);
      for (int i = 0; i < r1.principal.size(); ++i)
        CHECK(std::abs(r1.principal[i] - r2.principal[i]) < 1e-9);
    }
  }
}

TEST_CASE("normal curvature of a direction") {
  const auto metric = MetricSpec::euclidean(3);
  const Eigen::VectorXd ones2 = Eigen::VectorXd::Ones(2);

  const auto sph =
      differential_split(CovectorFieldSpec::exact_sphere(3), metric, v3(0, 0, 2));
  const auto hs = second_fundamental_restricted(sph, adapted_frame(sph, metric));
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = angle(rng);
    const auto nc = normal_curvature_of_direction(hs, ones2, v2(std::cos(a), std::sin(a)));
    CHECK(nc.value == doctest::Approx(-0.5));
    CHECK_FALSE(nc.asymptotic);
  }

  const auto con = differential_split(CovectorFieldSpec::contact(), metric, v3(0, 0, 0));
  const auto hc = second_fundamental_restricted(con, adapted_frame(con, metric));
  const auto axis = normal_curvature_of_direction(hc, ones2, v2(1, 0));
  CHECK(axis.value == doctest::Approx(0.0));
  CHECK(axis.asymptotic);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto diag = normal_curvature_of_direction(hc, ones2, v2(inv_sqrt2, inv_sqrt2));
  CHECK(diag.value == doctest::Approx(0.5));
  CHECK_FALSE(diag.asymptotic);

  CHECK_THROWS_AS((void)normal_curvature_of_direction(hc, ones2, v2(2, 0)), Error);
}

TEST_CASE("closed-form asymptotic directions at hyperbolic pseudo-surface points") {
  const auto metric = MetricSpec::euclidean(3);
  const Eigen::VectorXd ones2 = Eigen::VectorXd::Ones(2);

  // contact form at the origin: the quadratic is -t1 t2, null on the axes
  const auto con = differential_split(CovectorFieldSpec::contact(), metric, v3(0, 0, 0));
  const auto hc = second_fundamental_restricted(con, adapted_frame(con, metric));
  auto dirs = asymptotic_directions(hc);
  REQUIRE(dirs.size() == 2);
  for (const auto& d : dirs) {
    const auto nc = normal_curvature_of_direction(hc, ones2, d);
    CHECK(nc.asymptotic);
  }

  // a generic hyperbolic quadratic
  Eigen::MatrixXd h(2, 2);
  h << 1.0, 0.4, 0.4, -0.7;
  dirs = asymptotic_directions(h);
  REQUIRE(dirs.size() == 2);
  for (const auto& d : dirs) CHECK(std::abs(d.dot(h * d)) < 1e-12);

  // elliptic points have none
  const auto sph = differential_split(CovectorFieldSpec::exact_sphere(3), metric, v3(0, 0, 2));
  const auto hs = second_fundamental_restricted(sph, adapted_frame(sph, metric));
  CHECK(asymptotic_directions(hs).empty());
}

TEST_CASE("omega decomposition of the contact form at the origin") {
  const auto metric = MetricSpec::euclidean(3);
  const auto g = differential_split(CovectorFieldSpec::contact(), metric, v3(0, 0, 0));
  const auto frame = adapted_frame(g, metric);
  const auto split = omega_decompose(g, frame);
  CHECK(split.varpi(0, 1) == doctest::Approx(1.0));
  CHECK(split.varpi(1, 0) == doctest::Approx(-1.0));
  CHECK(split.eta.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("omega decomposition vanishes for exact fields") {
  const auto metric = MetricSpec::euclidean(3);
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd x = oracle::random_shell_point(3, rng);
    const auto g = differential_split(CovectorFieldSpec::exact_sphere(3), metric, x);
    const auto split = omega_decompose(g, adapted_frame(g, metric));
    CHECK(split.varpi.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(split.eta.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("omega decomposition reconstructs W on random vector pairs") {
  std::mt19937 rng(67);
  const auto metric = MetricSpec::euclidean(5);
  const auto spec = CovectorFieldSpec::darboux(2, 5);
  const Eigen::VectorXd x0 = oracle::random_point(5, rng);
  const auto g = differential_split(spec, metric, x0);
  const auto frame = adapted_frame(g, metric);
  const auto split = omega_decompose(g, frame);
  const auto [p_t, p_n] = tangent_projectors(g);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd u = oracle::random_point(5, rng);
    const Eigen::VectorXd v = oracle::random_point(5, rng);
    const Eigen::VectorXd ut = frame.to_frame(p_t * u);
    const Eigen::VectorXd vt = frame.to_frame(p_t * v);
    const double lhs = g.w_form(u, v);
    const double rhs = ut.dot(split.varpi * vt) + split.eta.dot(ut) * g.n_cov.dot(v) -
                       split.eta.dot(vt) * g.n_cov.dot(u);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}
