#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfgeom/acceptance.hpp"
#include "pfgeom/covector_field.hpp"
#include "pfgeom/curvature.hpp"
#include "pfgeom/curves.hpp"
#include "pfgeom/em.hpp"
#include "pfgeom/error.hpp"
#include "pfgeom/frame.hpp"
#include "pfgeom/pfaff.hpp"
#include "pfgeom/point_geometry.hpp"
#include "pfgeom/trajectory_io.hpp"

namespace py = pybind11;
using namespace pfgeom;

namespace {

DiffMode parse_mode(const std::string& mode) {
  if (mode == "analytic") return DiffMode::analytic;
  if (mode == "finite_diff") return DiffMode::finite_diff;
  throw Error(ErrorKind::ConfigError, "mode must be \"analytic\" or \"finite_diff\"");
}

CurveKind parse_kind(const std::string& kind) {
  if (kind == "normal_curve") return CurveKind::normal_curve;
  if (kind == "geodesic") return CurveKind::geodesic;
  throw Error(ErrorKind::ConfigError, "kind must be \"normal_curve\" or \"geodesic\"");
}

Polynomial poly_from_terms(int dim, const std::vector<std::pair<double, std::vector<int>>>& terms) {
  std::vector<Term> parsed;
  for (const auto& [coeff, exponents] : terms) parsed.push_back(Term{coeff, exponents});
  return Polynomial(dim, std::move(parsed));
}

Eigen::MatrixXd traj_matrix(const Trajectory& t, bool velocities) {
  Eigen::MatrixXd out(static_cast<long>(t.states.size()), t.dim);
  for (size_t i = 0; i < t.states.size(); ++i)
    out.row(static_cast<long>(i)) = velocities ? t.states[i].v : t.states[i].x;
  return out;
}

Eigen::VectorXd traj_column(const Trajectory& t, double TrajectoryState::*member) {
  Eigen::VectorXd out(static_cast<long>(t.states.size()));
  for (size_t i = 0; i < t.states.size(); ++i) out[static_cast<long>(i)] = t.states[i].*member;
  return out;
}

}  // namespace

PYBIND11_MODULE(_pfgeom, m) {
  m.doc() = "Pfaffian constraint geometry: integrability classes, induced "
            "curvature, and constrained geodesics";

  py::register_exception<Error>(m, "Error");

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init(&poly_from_terms), py::arg("dim"), py::arg("terms"))
      .def_static("constant", &Polynomial::constant)
      .def_static("coordinate", &Polynomial::coordinate)
      .def_property_readonly("dim", &Polynomial::dim)
      .def("eval", &Polynomial::eval)
      .def("derivative", &Polynomial::derivative)
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; });

  py::class_<MetricSpec>(m, "MetricSpec")
      .def_static("euclidean", &MetricSpec::euclidean)
      .def_static("minkowski", &MetricSpec::minkowski)
      .def_static("bundle5", &MetricSpec::bundle5)
      .def_static("from_diag", &MetricSpec::from_diag)
      .def_readonly("dim", &MetricSpec::dim)
      .def_readonly("diag", &MetricSpec::diag)
      .def_readonly("name", &MetricSpec::name)
      .def("raise_index", &MetricSpec::raise)
      .def("lower_index", &MetricSpec::lower)
      .def("pair_vectors", &MetricSpec::pair_vectors)
      .def("pair_covectors", &MetricSpec::pair_covectors);

  py::class_<CovectorFieldSpec>(m, "CovectorFieldSpec")
      .def(py::init([](std::vector<Polynomial> comps, const std::string& label) {
             return CovectorFieldSpec(std::move(comps), label);
           }),
           py::arg("components"), py::arg("label") = "polynomial")
      .def_static("exact_sphere", &CovectorFieldSpec::exact_sphere)
      .def_static("linear", &CovectorFieldSpec::linear)
      .def_static("contact", &CovectorFieldSpec::contact)
      .def_static("darboux", &CovectorFieldSpec::darboux, py::arg("k"), py::arg("dim"))
      .def_static("integrating_factor", &CovectorFieldSpec::integrating_factor)
      .def_property_readonly("dim", &CovectorFieldSpec::dim)
      .def_property_readonly("label", &CovectorFieldSpec::label)
      .def("eval", &CovectorFieldSpec::eval)
      .def("raw_jacobian", &CovectorFieldSpec::raw_jacobian)
      .def("scaled", &CovectorFieldSpec::scaled);

  py::class_<PointGeometry>(m, "PointGeometry")
      .def_readonly("x", &PointGeometry::x)
      .def_readonly("n_cov", &PointGeometry::n_cov)
      .def_readonly("n_vec", &PointGeometry::n_vec)
      .def_readonly("norm", &PointGeometry::norm)
      .def_readonly("sign", &PointGeometry::sign)
      .def_readonly("jac", &PointGeometry::jac)
      .def_readonly("sym", &PointGeometry::sym)
      .def_readonly("antisym", &PointGeometry::antisym);

  m.def(
      "differential_split",
      [](const CovectorFieldSpec& spec, const MetricSpec& metric, const Eigen::VectorXd& x,
         const std::string& mode) {
        return differential_split(spec, metric, x, parse_mode(mode));
      },
      py::arg("spec"), py::arg("metric"), py::arg("x"), py::arg("mode") = "analytic");
  m.def("differential_split_raw",
        [](const CovectorFieldSpec& spec, const MetricSpec& metric, const Eigen::VectorXd& x) {
          return differential_split_raw(spec, metric, x);
        });
  m.def("metric_dual_unit",
        [](const Eigen::VectorXd& raw, const MetricSpec& metric) {
          const UnitNormal u = metric_dual_unit(raw, metric);
          return py::make_tuple(u.n_cov, u.n_vec, u.norm);
        });

  py::class_<AltTensor>(m, "AltTensor")
      .def_static("from_covector", &AltTensor::from_covector)
      .def_static("from_antisymmetric_matrix", &AltTensor::from_antisymmetric_matrix)
      .def_property_readonly("dim", &AltTensor::dim)
      .def_property_readonly("degree", &AltTensor::degree)
      .def_property_readonly("components", &AltTensor::components)
      .def("component", &AltTensor::component)
      .def("frobenius_norm", &AltTensor::frobenius_norm)
      .def("max_abs", &AltTensor::max_abs);
  m.def("wedge_product", &wedge_product);
  m.def("frobenius_three_form", &frobenius_three_form);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](const Eigen::VectorXd& center, const Eigen::VectorXd& half_width,
                       int samples) {
             GridSpec g;
             g.center = center;
             g.half_width = half_width;
             g.samples_per_axis = samples;
             g.validate();
             return g;
           }),
           py::arg("center"), py::arg("half_width"), py::arg("samples_per_axis"))
      .def_property_readonly("total_points", &GridSpec::total_points)
      .def("point", &GridSpec::point);

  py::class_<IntegrabilityReport>(m, "IntegrabilityReport")
      .def_readonly("point", &IntegrabilityReport::point)
      .def_readonly("sequence_norms", &IntegrabilityReport::sequence_norms)
      .def_readonly("pair_count", &IntegrabilityReport::pair_count)
      .def_readonly("degree_of_integrability", &IntegrabilityReport::degree_of_integrability)
      .def_readonly("completely_integrable", &IntegrabilityReport::completely_integrable);
  m.def(
      "integrability_class_at_point",
      [](const CovectorFieldSpec& spec, const MetricSpec& metric, const Eigen::VectorXd& x,
         double tol, const std::string& mode) {
        return integrability_class_at_point(spec, metric, x, tol, parse_mode(mode));
      },
      py::arg("spec"), py::arg("metric"), py::arg("x"), py::arg("tol") = 1e-9,
      py::arg("mode") = "analytic");

  py::class_<RegionReport>(m, "RegionReport")
      .def_readonly("total_points", &RegionReport::total_points)
      .def_readonly("histogram", &RegionReport::histogram)
      .def_readonly("majority_degree", &RegionReport::majority_degree)
      .def_property_readonly("exceptional_count",
                             [](const RegionReport& r) { return r.exceptional.size(); });
  m.def("classify_region", &classify_region, py::arg("spec"), py::arg("metric"),
        py::arg("grid"), py::arg("tol") = 1e-9, py::arg("threads") = 1);

  py::class_<AdaptedFrame>(m, "AdaptedFrame")
      .def_readonly("x", &AdaptedFrame::x)
      .def_readonly("tangent", &AdaptedFrame::tangent)
      .def_readonly("signs", &AdaptedFrame::signs)
      .def_readonly("coframe", &AdaptedFrame::coframe)
      .def_readonly("n_vec", &AdaptedFrame::n_vec)
      .def("restricted_metric", &AdaptedFrame::restricted_metric)
      .def("to_frame", &AdaptedFrame::to_frame)
      .def("to_ambient", &AdaptedFrame::to_ambient);
  m.def("tangent_projectors", [](const PointGeometry& geom) {
    auto [p_t, p_n] = tangent_projectors(geom);
    return py::make_tuple(p_t, p_n);
  });
  m.def("adapted_frame", &adapted_frame, py::arg("geom"), py::arg("metric"),
        py::arg("pivot_tol") = 1e-10);
  m.def("second_fundamental_restricted", &second_fundamental_restricted);
  m.def("omega_decompose", [](const PointGeometry& geom, const AdaptedFrame& frame) {
    const OmegaSplit split = omega_decompose(geom, frame);
    return py::make_tuple(split.varpi, split.eta);
  });

  py::class_<CurvatureReport>(m, "CurvatureReport")
      .def_readonly("point", &CurvatureReport::point)
      .def_readonly("eigenvalues", &CurvatureReport::eigenvalues)
      .def_readonly("real_spectrum", &CurvatureReport::real_spectrum)
      .def_readonly("principal", &CurvatureReport::principal)
      .def_property_readonly(
          "classification",
          [](const CurvatureReport& r) { return std::string(to_string(r.classification)); })
      .def_readonly("mean_curvature", &CurvatureReport::mean_curvature)
      .def_readonly("gaussian_curvature", &CurvatureReport::gaussian_curvature)
      .def_readonly("radii", &CurvatureReport::radii);
  m.def("curvature_report", &curvature_report, py::arg("h_restricted"),
        py::arg("restricted_metric"), py::arg("eigen_zero_tol") = 1e-8);
  m.def(
      "curvature_report_at",
      [](const CovectorFieldSpec& spec, const MetricSpec& metric, const Eigen::VectorXd& x,
         const std::string& mode, double tol) {
        return curvature_report_at(spec, metric, x, parse_mode(mode), tol);
      },
      py::arg("spec"), py::arg("metric"), py::arg("x"), py::arg("mode") = "analytic",
      py::arg("eigen_zero_tol") = 1e-8);
  m.def(
      "normal_curvature_of_direction",
      [](const Eigen::MatrixXd& h, const Eigen::VectorXd& signs, const Eigen::VectorXd& t,
         double tol) {
        const NormalCurvature nc = normal_curvature_of_direction(h, signs, t, tol);
        return py::make_tuple(nc.value, nc.asymptotic);
      },
      py::arg("h_restricted"), py::arg("signs"), py::arg("t"),
      py::arg("asymptotic_tol") = 1e-8);
  m.def("asymptotic_directions", &asymptotic_directions, py::arg("h_restricted"),
        py::arg("tol") = 1e-12);

  py::class_<IntegratorSettings>(m, "IntegratorSettings")
      .def(py::init<>())
      .def_readwrite("step", &IntegratorSettings::step)
      .def_readwrite("steps", &IntegratorSettings::steps)
      .def_readwrite("velocity_projection", &IntegratorSettings::velocity_projection)
      .def_readwrite("renormalize_speed", &IntegratorSettings::renormalize_speed)
      .def_readwrite("parameter_ceiling", &IntegratorSettings::parameter_ceiling);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("dim", &Trajectory::dim)
      .def_readonly("kind", &Trajectory::kind)
      .def_readonly("step", &Trajectory::step)
      .def_readonly("steps", &Trajectory::steps)
      .def_property_readonly("status",
                             [](const Trajectory& t) {
                               switch (t.status) {
                                 case TrajectoryStatus::ok:
                                   return "ok";
                                 case TrajectoryStatus::aborted_null_normal:
                                   return "aborted_null_normal";
                                 case TrajectoryStatus::stopped_eigenvalue_collision:
                                   return "stopped_eigenvalue_collision";
                               }
                               return "unknown";
                             })
      .def_property_readonly("samples",
                             [](const Trajectory& t) { return t.states.size(); })
      .def("positions", [](const Trajectory& t) { return traj_matrix(t, false); })
      .def("velocities", [](const Trajectory& t) { return traj_matrix(t, true); })
      .def("parameters", [](const Trajectory& t) { return traj_column(t, &TrajectoryState::s); })
      .def("lambdas", [](const Trajectory& t) { return traj_column(t, &TrajectoryState::lambda); })
      .def("drifts", [](const Trajectory& t) { return traj_column(t, &TrajectoryState::drift); })
      .def("speeds", [](const Trajectory& t) { return traj_column(t, &TrajectoryState::speed); })
      .def("max_drift", &Trajectory::max_drift)
      .def("to_csv", [](const Trajectory& t) { return trajectory_csv(t); });

  m.def("normal_curve_rhs", &normal_curve_rhs);
  m.def("constrained_geodesic_rhs",
        [](const CovectorFieldSpec& spec, const MetricSpec& metric, const Eigen::VectorXd& x,
           const Eigen::VectorXd& v, double lambda) {
          const GeodesicRhs rhs = constrained_geodesic_rhs(spec, metric, x, v, lambda);
          return py::make_tuple(rhs.acceleration, rhs.dlambda);
        });
  m.def(
      "integrate",
      [](const CovectorFieldSpec& spec, const MetricSpec& metric, const std::string& kind,
         const Eigen::VectorXd& x0, const Eigen::VectorXd& v0, double lambda0,
         const IntegratorSettings& settings) {
        return integrate(spec, metric, parse_kind(kind), x0, v0, lambda0, settings);
      },
      py::arg("spec"), py::arg("metric"), py::arg("kind"), py::arg("x0"), py::arg("v0"),
      py::arg("lambda0") = 0.0, py::arg("settings") = IntegratorSettings{});

  py::class_<KinematicsSample>(m, "KinematicsSample")
      .def_readonly("s", &KinematicsSample::s)
      .def_readonly("speed", &KinematicsSample::speed)
      .def_readonly("speed_dot", &KinematicsSample::speed_dot)
      .def_readonly("kappa", &KinematicsSample::kappa)
      .def_readonly("a_tangential", &KinematicsSample::a_tangential)
      .def_readonly("a_centripetal", &KinematicsSample::a_centripetal)
      .def_readonly("residual", &KinematicsSample::residual)
      .def_readonly("degenerate", &KinematicsSample::degenerate);
  m.def("kinematics_decompose", &kinematics_decompose, py::arg("trajectory"),
        py::arg("metric"), py::arg("degenerate_tol") = 1e-8);

  py::class_<NormalityReport>(m, "NormalityReport")
      .def_readonly("normal", &NormalityReport::normal)
      .def_readonly("max_ivarpi", &NormalityReport::max_ivarpi)
      .def_readonly("max_speed_dot", &NormalityReport::max_speed_dot);
  m.def("normality_check", &normality_check, py::arg("spec"), py::arg("metric"),
        py::arg("trajectory"), py::arg("tol") = 1e-6);

  m.def("line_of_curvature_integrate", &line_of_curvature_integrate, py::arg("spec"),
        py::arg("metric"), py::arg("x0"), py::arg("eigen_index"), py::arg("settings"),
        py::arg("gap_tol") = 1e-8);

  // ---- electromagnetic example ----
  auto em_mod = m.def_submodule("em", "charge in an electromagnetic field");
  py::class_<em::FourPotentialSpec>(em_mod, "FourPotentialSpec")
      .def_static("uniform_B", &em::FourPotentialSpec::uniform_b_spec, py::arg("B"))
      .def_static("crossed_EB", &em::FourPotentialSpec::crossed_eb_spec, py::arg("E"),
                  py::arg("B"))
      .def_static("pure_gauge", &em::FourPotentialSpec::pure_gauge_spec, py::arg("phi"))
      .def_static("custom", &em::FourPotentialSpec::custom_spec, py::arg("A"))
      .def_readwrite("q", &em::FourPotentialSpec::q)
      .def_readwrite("m", &em::FourPotentialSpec::m)
      .def_readwrite("c", &em::FourPotentialSpec::c)
      .def_property_readonly("lambda_", &em::FourPotentialSpec::lambda)
      .def("field_strength", &em::FourPotentialSpec::field_strength)
      .def("potential", &em::FourPotentialSpec::potential)
      .def_property_readonly("kind", &em::FourPotentialSpec::kind_name);
  em_mod.def("build_bundle_form", &em::build_bundle_form);
  py::class_<em::EMReport>(em_mod, "EMReport")
      .def_readonly("f_norm", &em::EMReport::f_norm)
      .def_readonly("af_norm", &em::EMReport::af_norm)
      .def_readonly("ff_norm", &em::EMReport::ff_norm)
      .def_readonly("dphi_ff_norm", &em::EMReport::dphi_ff_norm)
      .def_readonly("gauge_flag", &em::EMReport::gauge_flag)
      .def_readonly("degree", &em::EMReport::degree);
  em_mod.def("em_integrability_report", &em::em_integrability_report, py::arg("pot"),
             py::arg("grid4"), py::arg("tol") = 1e-9);
  em_mod.def("lorentz_integrate", &em::lorentz_integrate);
  em_mod.def("constrained_geodesic_em", &em::constrained_geodesic_em);
  em_mod.def("trajectory_compare", [](const Trajectory& a, const Trajectory& b) {
    const em::TrajectoryDistance d = em::trajectory_compare(a, b);
    return py::make_tuple(d.max_pointwise, d.rms);
  });

  m.def("run_acceptance", []() {
    std::vector<std::tuple<int, std::string, bool, std::string>> out;
    for (const auto& r : acceptance::run_all())
      out.emplace_back(r.id, r.name, r.passed, r.detail);
    return out;
  });
}
