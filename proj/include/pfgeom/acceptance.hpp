#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pfgeom::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Run the full verification suite (criteria 1-10). Criterion 10 recomputes
/// the others and demands byte-identical serialized reports.
std::vector<CriterionResult> run_all();

nlohmann::json report_json(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace pfgeom::acceptance
