#include "pfgeom/config.hpp"

#include <fstream>

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ConfigError, path + ": " + what);
}

double number_at(const json& node, const std::string& path) {
  if (!node.is_number()) fail(path, "expected a number");
  return node.get<double>();
}

long integer_at(const json& node, const std::string& path) {
  if (!node.is_number_integer()) fail(path, "expected an integer");
  return node.get<long>();
}

Eigen::VectorXd vector_at(const json& node, int expected, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array");
  if (expected >= 0 && static_cast<int>(node.size()) != expected)
    fail(path, "expected " + std::to_string(expected) + " entries");
  Eigen::VectorXd out(node.size());
  for (size_t i = 0; i < node.size(); ++i)
    out[static_cast<long>(i)] = number_at(node[i], path + "[" + std::to_string(i) + "]");
  return out;
}

MetricSpec parse_metric(const json& node, int dimension, const std::string& path) {
  try {
    if (node.is_string()) return MetricSpec::preset(node.get<std::string>(), dimension);
    if (node.is_object() && node.contains("diag"))
      return MetricSpec::from_diag(vector_at(node["diag"], dimension, path + ".diag"));
  } catch (const Error& e) {
    fail(path, e.detail());
  }
  fail(path, "expected a preset name or {\"diag\": [...]}");
}

GridSpec parse_grid(const json& node, int dimension, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
  GridSpec grid;
  if (!node.contains("center")) fail(path + ".center", "missing");
  grid.center = vector_at(node["center"], dimension, path + ".center");
  if (!node.contains("half_width")) fail(path + ".half_width", "missing");
  const json& hw = node["half_width"];
  if (hw.is_number())
    grid.half_width = Eigen::VectorXd::Constant(dimension, hw.get<double>());
  else
    grid.half_width = vector_at(hw, dimension, path + ".half_width");
  grid.samples_per_axis = node.contains("samples_per_axis")
                              ? static_cast<int>(integer_at(node["samples_per_axis"],
                                                            path + ".samples_per_axis"))
                              : 1;
  try {
    grid.validate();
  } catch (const Error& e) {
    fail(path, e.detail());
  }
  return grid;
}

em::FourPotentialSpec parse_em(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
  if (!node.contains("kind")) fail(path + ".kind", "missing");
  const std::string kind = node["kind"].get<std::string>();
  em::FourPotentialSpec pot;
  if (kind == "uniform_B") {
    pot = em::FourPotentialSpec::uniform_b_spec(
        node.contains("B") ? number_at(node["B"], path + ".B") : 1.0);
  } else if (kind == "crossed_EB") {
    pot = em::FourPotentialSpec::crossed_eb_spec(
        node.contains("E") ? number_at(node["E"], path + ".E") : 1.0,
        node.contains("B") ? number_at(node["B"], path + ".B") : 1.0);
  } else if (kind == "pure_gauge") {
    if (!node.contains("phi")) fail(path + ".phi", "missing");
    pot = em::FourPotentialSpec::pure_gauge_spec(
        parse_polynomial(node["phi"], 4, path + ".phi"));
  } else if (kind == "custom") {
    if (!node.contains("A") || !node["A"].is_array() || node["A"].size() != 4)
      fail(path + ".A", "expected 4 component term tables");
    std::vector<Polynomial> a;
    for (size_t i = 0; i < 4; ++i)
      a.push_back(parse_polynomial(node["A"][i], 4, path + ".A[" + std::to_string(i) + "]"));
    pot = em::FourPotentialSpec::custom_spec(std::move(a));
  } else {
    fail(path + ".kind", "unknown potential kind \"" + kind + "\"");
  }
  if (node.contains("q")) pot.q = number_at(node["q"], path + ".q");
  if (node.contains("m")) pot.m = number_at(node["m"], path + ".m");
  if (node.contains("c")) pot.c = number_at(node["c"], path + ".c");
  try {
    pot.validate();
  } catch (const Error& e) {
    fail(path, e.detail());
  }
  return pot;
}

CovectorFieldSpec parse_form(const json& node, int dimension, const std::string& path) {
  try {
    if (node.contains("catalog")) {
      const std::string name = node["catalog"].get<std::string>();
      const json params = node.value("params", json::object());
      if (name == "integrating_factor" && params.contains("lambda")) {
        if (!params.contains("phi")) fail(path + ".params.phi", "missing");
        return CovectorFieldSpec::integrating_factor(
            parse_polynomial(params["lambda"], dimension, path + ".params.lambda"),
            parse_polynomial(params["phi"], dimension, path + ".params.phi"));
      }
      const int k = params.contains("k")
                        ? static_cast<int>(integer_at(params["k"], path + ".params.k"))
                        : 1;
      return CovectorFieldSpec::catalog(name, dimension, k);
    }
    if (node.contains("polynomial")) {
      const json& poly = node["polynomial"];
      if (!poly.contains("components") || !poly["components"].is_array())
        fail(path + ".polynomial.components", "expected an array of term tables");
      const json& comps = poly["components"];
      if (static_cast<int>(comps.size()) != dimension)
        fail(path + ".polynomial.components",
             "expected " + std::to_string(dimension) + " components");
      std::vector<Polynomial> parsed;
      for (size_t i = 0; i < comps.size(); ++i)
        parsed.push_back(parse_polynomial(
            comps[i], dimension, path + ".polynomial.components[" + std::to_string(i) + "]"));
      return CovectorFieldSpec(std::move(parsed), "polynomial");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    fail(path, e.detail());
  }
  fail(path, "expected one of \"catalog\", \"polynomial\", \"em\"");
}

}  // namespace

Polynomial parse_polynomial(const json& node, int dim, const std::string& where) {
  if (!node.is_array()) fail(where, "expected a term array");
  std::vector<Term> terms;
  for (size_t i = 0; i < node.size(); ++i) {
    const json& t = node[i];
    const std::string tpath = where + "[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents"))
      fail(tpath, "expected {\"coeff\": c, \"exponents\": [...]}");
    Term term;
    term.coeff = number_at(t["coeff"], tpath + ".coeff");
    if (!t["exponents"].is_array() || static_cast<int>(t["exponents"].size()) != dim)
      fail(tpath + ".exponents", "expected " + std::to_string(dim) + " entries");
    for (const auto& e : t["exponents"]) {
      if (!e.is_number_integer() || e.get<long>() < 0)
        fail(tpath + ".exponents", "entries must be integers >= 0");
      term.exponents.push_back(static_cast<int>(e.get<long>()));
    }
    terms.push_back(std::move(term));
  }
  try {
    return Polynomial(dim, std::move(terms));
  } catch (const Error& e) {
    fail(where, e.detail());
  }
}

ScenarioConfig parse_config(const json& root) {
  if (!root.is_object()) fail("$", "top level must be an object");
  ScenarioConfig cfg;
  if (!root.contains("task")) fail("task", "missing");
  cfg.task = root["task"].get<std::string>();
  if (cfg.task != "classify" && cfg.task != "curvature" && cfg.task != "integrate" &&
      cfg.task != "verify")
    fail("task", "unknown task \"" + cfg.task + "\"");

  if (root.contains("tolerances")) {
    const json& tol = root["tolerances"];
    if (tol.contains("zero_form"))
      cfg.tolerances.zero_form = number_at(tol["zero_form"], "tolerances.zero_form");
    if (tol.contains("eigen_zero"))
      cfg.tolerances.eigen_zero = number_at(tol["eigen_zero"], "tolerances.eigen_zero");
    if (tol.contains("drift"))
      cfg.tolerances.drift = number_at(tol["drift"], "tolerances.drift");
  }
  if (root.contains("output")) {
    const json& out = root["output"];
    cfg.output.trajectory_csv = out.value("trajectory_csv", "");
    cfg.output.report_json = out.value("report_json", "");
  }

  if (cfg.task == "verify") {
    cfg.dimension = 3;
    cfg.metric = MetricSpec::euclidean(3);
    return cfg;
  }

  const bool has_em = root.contains("form") && root["form"].is_object() &&
                      root["form"].contains("em");
  if (has_em) {
    cfg.em_pot = parse_em(root["form"]["em"], "form.em");
    cfg.dimension = 5;
    cfg.metric = MetricSpec::bundle5();
    if (root.contains("space")) {
      const json& space = root["space"];
      if (space.contains("dimension") &&
          integer_at(space["dimension"], "space.dimension") != 5)
        fail("space.dimension", "electromagnetic scenarios use dimension 5");
      if (space.contains("metric") && space["metric"].is_string() &&
          space["metric"].get<std::string>() != "bundle5")
        fail("space.metric", "electromagnetic scenarios use the \"bundle5\" preset");
    }
    cfg.form = em::build_bundle_form(*cfg.em_pot);
  } else {
    if (!root.contains("space")) fail("space", "missing");
    const json& space = root["space"];
    if (!space.contains("dimension")) fail("space.dimension", "missing");
    cfg.dimension = static_cast<int>(integer_at(space["dimension"], "space.dimension"));
    if (cfg.dimension < 2 || cfg.dimension > 6)
      fail("space.dimension", "must be in [2, 6]");
    cfg.metric = space.contains("metric")
                     ? parse_metric(space["metric"], cfg.dimension, "space.metric")
                     : MetricSpec::euclidean(cfg.dimension);
    if (!root.contains("form")) fail("form", "missing");
    cfg.form = parse_form(root["form"], cfg.dimension, "form");
  }

  if (cfg.task == "classify" || cfg.task == "curvature") {
    if (!root.contains("grid")) fail("grid", "missing");
    const int grid_dim = cfg.em_pot ? 4 : cfg.dimension;  // em grids sample the base
    cfg.grid = parse_grid(root["grid"], grid_dim, "grid");
  }

  if (cfg.task == "integrate") {
    if (!root.contains("integrate")) fail("integrate", "missing");
    const json& node = root["integrate"];
    IntegrateConfig ic;
    if (!node.contains("kind")) fail("integrate.kind", "missing");
    ic.kind = node["kind"].get<std::string>();
    if (ic.kind != "normal_curve" && ic.kind != "geodesic" && ic.kind != "lorentz" &&
        ic.kind != "em_geodesic")
      fail("integrate.kind", "unknown kind \"" + ic.kind + "\"");
    const bool em_kind = ic.kind == "lorentz" || ic.kind == "em_geodesic";
    if (em_kind && !cfg.em_pot)
      fail("integrate.kind", "\"" + ic.kind + "\" needs an electromagnetic form");
    if (!em_kind && cfg.em_pot)
      fail("integrate.kind",
           "electromagnetic forms integrate with \"lorentz\" or \"em_geodesic\"");
    const int state_dim = em_kind ? 4 : cfg.dimension;
    if (!node.contains("x0")) fail("integrate.x0", "missing");
    ic.x0 = vector_at(node["x0"], state_dim, "integrate.x0");
    if (!node.contains("v0")) fail("integrate.v0", "missing");
    ic.v0 = vector_at(node["v0"], state_dim, "integrate.v0");
    ic.lambda0 = node.contains("lambda0") ? number_at(node["lambda0"], "integrate.lambda0") : 0.0;
    if (node.contains("step")) ic.settings.step = number_at(node["step"], "integrate.step");
    if (node.contains("steps"))
      ic.settings.steps = integer_at(node["steps"], "integrate.steps");
    if (node.contains("velocity_projection"))
      ic.settings.velocity_projection = node["velocity_projection"].get<bool>();
    if (node.contains("renormalize_speed"))
      ic.settings.renormalize_speed = node["renormalize_speed"].get<bool>();
    if (node.contains("parameter_ceiling"))
      ic.settings.parameter_ceiling =
          number_at(node["parameter_ceiling"], "integrate.parameter_ceiling");
    try {
      ic.settings.validate();
    } catch (const Error& e) {
      fail("integrate", e.detail());
    }
    cfg.integrate = std::move(ic);
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw Error(ErrorKind::ConfigError, "cannot open config file " + path);
  json root;
  try {
    root = json::parse(stream);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  return parse_config(root);
}

}  // namespace pfgeom
