#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pfgeom/covector_field.hpp"
#include "pfgeom/curves.hpp"
#include "pfgeom/em.hpp"
#include "pfgeom/metric.hpp"
#include "pfgeom/pfaff.hpp"

namespace pfgeom {

struct ToleranceConfig {
  double zero_form = 1e-9;
  double eigen_zero = 1e-8;
  double drift = 1e-7;
};

struct OutputConfig {
  std::string trajectory_csv;  // empty: skip the file
  std::string report_json;     // empty: print to stdout
};

struct IntegrateConfig {
  std::string kind;  // normal_curve | geodesic | lorentz | em_geodesic
  Eigen::VectorXd x0;
  Eigen::VectorXd v0;
  double lambda0 = 0.0;
  IntegratorSettings settings;
  int eigen_index = 0;  // reserved for line-of-curvature scenarios
};

/// One fully validated scenario. Exactly one of `form` / `em_pot` is set for
/// the non-verify tasks; em scenarios imply dimension 5 with the bundle5
/// metric.
struct ScenarioConfig {
  std::string task;  // classify | curvature | integrate | verify
  int dimension = 0;
  MetricSpec metric;
  std::optional<CovectorFieldSpec> form;
  std::optional<em::FourPotentialSpec> em_pot;
  std::optional<GridSpec> grid;
  std::optional<IntegrateConfig> integrate;
  ToleranceConfig tolerances;
  OutputConfig output;
  int threads = 1;
};

/// Parse and validate; every failure names the offending JSON path.
ScenarioConfig parse_config(const nlohmann::json& root);
ScenarioConfig load_config(const std::string& path);

/// Polynomial from the term-table encoding
/// [{"coeff": c, "exponents": [e0, ...]}, ...].
Polynomial parse_polynomial(const nlohmann::json& node, int dim, const std::string& where);

}  // namespace pfgeom
