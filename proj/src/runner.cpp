#include "pfgeom/runner.hpp"

#include <filesystem>

#include "pfgeom/acceptance.hpp"
#include "pfgeom/curvature.hpp"
#include "pfgeom/trajectory_io.hpp"

namespace pfgeom {

namespace {

using nlohmann::json;

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json grid_json(const GridSpec& grid) {
  return {{"center", vector_json(grid.center)},
          {"half_width", vector_json(grid.half_width)},
          {"samples_per_axis", grid.samples_per_axis}};
}

std::string resolve(const std::string& out_dir, const std::string& path) {
  if (path.empty() || out_dir.empty()) return path;
  return (std::filesystem::path(out_dir) / path).string();
}

const char* status_name(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::ok:
      return "ok";
    case TrajectoryStatus::aborted_null_normal:
      return "aborted_null_normal";
    case TrajectoryStatus::stopped_eigenvalue_collision:
      return "stopped_eigenvalue_collision";
  }
  return "unknown";
}

json classify_report(const ScenarioConfig& cfg) {
  const RegionReport region =
      classify_region(*cfg.form, cfg.metric, *cfg.grid, cfg.tolerances.zero_form, cfg.threads);
  json histogram = json::object();
  for (const auto& [degree, count] : region.histogram)
    histogram[std::to_string(degree)] = count;
  json norms = json::object();
  for (const auto& [label, range] : region.norm_range)
    norms[label] = {{"min", range.first}, {"max", range.second}};
  json exceptional = json::array();
  for (const auto& ep : region.exceptional)
    exceptional.push_back({{"index", ep.index},
                           {"point", vector_json(ep.point)},
                           {"error", to_string(ep.kind)},
                           {"message", ep.message}});
  return {{"task", "classify"},
          {"form", cfg.form->label()},
          {"dimension", cfg.dimension},
          {"metric", cfg.metric.name},
          {"tolerance", cfg.tolerances.zero_form},
          {"grid", grid_json(*cfg.grid)},
          {"total_points", region.total_points},
          {"histogram", histogram},
          {"majority_degree", region.majority_degree},
          {"sequence_norms", norms},
          {"exceptional_points", exceptional}};
}

json curvature_entry(const ScenarioConfig& cfg, const Eigen::VectorXd& ambient_point) {
  try {
    const CurvatureReport rep = curvature_report_at(*cfg.form, cfg.metric, ambient_point,
                                                    DiffMode::analytic,
                                                    cfg.tolerances.eigen_zero);
    json entry = {{"point", vector_json(ambient_point)},
                  {"classification", to_string(rep.classification)},
                  {"mean_curvature", rep.mean_curvature},
                  {"gaussian_curvature", rep.gaussian_curvature}};
    if (rep.real_spectrum) {
      entry["principal_curvatures"] = vector_json(rep.principal);
      entry["radii"] = rep.radii;
    } else {
      json pairs = json::array();
      for (const auto& ev : rep.eigenvalues) pairs.push_back({ev.real(), ev.imag()});
      entry["principal_curvatures_complex"] = pairs;
    }
    return entry;
  } catch (const Error& e) {
    return {{"point", vector_json(ambient_point)},
            {"error", to_string(e.kind())},
            {"message", e.detail()}};
  }
}

json curvature_report_task(const ScenarioConfig& cfg) {
  json points = json::array();
  const long total = cfg.grid->total_points();
  for (long i = 0; i < total; ++i) {
    Eigen::VectorXd x = cfg.grid->point(i);
    if (cfg.em_pot) {  // base grid lifted to the bundle at fiber coordinate 0
      Eigen::VectorXd lifted = Eigen::VectorXd::Zero(5);
      lifted.head(4) = x;
      x = lifted;
    }
    points.push_back(curvature_entry(cfg, x));
  }
  return {{"task", "curvature"},
          {"form", cfg.form->label()},
          {"dimension", cfg.dimension},
          {"metric", cfg.metric.name},
          {"grid", grid_json(*cfg.grid)},
          {"points", points}};
}

Trajectory run_integration(const ScenarioConfig& cfg) {
  const IntegrateConfig& ic = *cfg.integrate;
  if (ic.kind == "lorentz")
    return em::lorentz_integrate(*cfg.em_pot, ic.x0, ic.v0, ic.settings);
  if (ic.kind == "em_geodesic")
    return em::constrained_geodesic_em(*cfg.em_pot, ic.x0, ic.v0, ic.settings);
  const CurveKind kind =
      ic.kind == "normal_curve" ? CurveKind::normal_curve : CurveKind::geodesic;
  return integrate(*cfg.form, cfg.metric, kind, ic.x0, ic.v0, ic.lambda0, ic.settings);
}

json integrate_report(const ScenarioConfig& cfg, const Trajectory& traj) {
  json report = {{"task", "integrate"},
                 {"kind", traj.kind},
                 {"status", status_name(traj.status)},
                 {"step", traj.step},
                 {"steps", traj.steps},
                 {"samples", traj.states.size()}};
  if (!traj.message.empty()) report["message"] = traj.message;
  if (!traj.states.empty()) {
    const TrajectoryState& last = traj.back();
    report["endpoint"] = {{"s", last.s},
                          {"x", vector_json(last.x)},
                          {"v", vector_json(last.v)},
                          {"lambda", last.lambda}};
    double smin = traj.states.front().speed, smax = smin;
    for (const auto& st : traj.states) {
      smin = std::min(smin, st.speed);
      smax = std::max(smax, st.speed);
    }
    report["max_drift"] = traj.max_drift();
    report["speed"] = {{"min", smin}, {"max", smax}, {"final", last.speed}};
  }
  // normality verdict for the in-surface kinds
  if (traj.status == TrajectoryStatus::ok && traj.states.size() >= 3 &&
      cfg.integrate->kind != "lorentz") {
    const NormalityReport normality =
        normality_check(*cfg.form, cfg.metric, traj, cfg.tolerances.drift);
    report["normality"] = {{"normal", normality.normal},
                           {"max_ivarpi", normality.max_ivarpi},
                           {"max_speed_dot", normality.max_speed_dot}};
  } else {
    report["normality"] = nullptr;
  }
  return report;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ConfigError ? 1 : 2;
}

nlohmann::json error_json(const Error& error) {
  return {{"error", {{"kind", to_string(error.kind())}, {"message", error.detail()}}}};
}

RunResult run_task(const ScenarioConfig& cfg, const std::string& out_dir) {
  RunResult result;

  if (cfg.task == "verify") {
    const auto criteria = acceptance::run_all();
    result.report = acceptance::report_json(criteria);
    result.exit_code = acceptance::all_passed(criteria) ? 0 : 3;
  } else if (cfg.task == "classify") {
    result.report = classify_report(cfg);
  } else if (cfg.task == "curvature") {
    result.report = curvature_report_task(cfg);
  } else if (cfg.task == "integrate") {
    const Trajectory traj = run_integration(cfg);
    result.report = integrate_report(cfg, traj);
    if (traj.status != TrajectoryStatus::ok) result.exit_code = 2;
    if (!cfg.output.trajectory_csv.empty()) {
      result.trajectory_path = resolve(out_dir, cfg.output.trajectory_csv);
      write_trajectory_csv(traj, result.trajectory_path);
    }
  } else {
    throw Error(ErrorKind::ConfigError, "unknown task \"" + cfg.task + "\"");
  }

  if (!cfg.output.report_json.empty()) {
    result.report_path = resolve(out_dir, cfg.output.report_json);
    atomic_write_text(result.report_path, result.report.dump(2) + "\n");
  }
  return result;
}

}  // namespace pfgeom
