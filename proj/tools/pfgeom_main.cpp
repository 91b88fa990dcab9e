#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pfgeom/config.hpp"
#include "pfgeom/error.hpp"
#include "pfgeom/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian constraint geometry: classify, curve, integrate, verify"};
  std::string config_path;
  std::string task_override;
  std::string out_dir;
  app.add_option("--config", config_path, "scenario JSON file")->required();
  app.add_option("--task", task_override, "override the task field");
  app.add_option("--out-dir", out_dir, "directory for output artifacts");
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
  if (const char* env = std::getenv("PFGEOM_THREADS")) {
    threads = std::max(1, std::atoi(env));
  }

  try {
    pfgeom::ScenarioConfig cfg = pfgeom::load_config(config_path);
    if (!task_override.empty()) {
      // re-parse with the task replaced so task-specific blocks are validated
      std::ifstream stream(config_path);
      nlohmann::json root = nlohmann::json::parse(stream);
      root["task"] = task_override;
      cfg = pfgeom::parse_config(root);
    }
    cfg.threads = threads;

    const pfgeom::RunResult result = pfgeom::run_task(cfg, out_dir);
    if (result.report_path.empty())
      std::cout << result.report.dump(2) << std::endl;
    else
      std::cout << "report written to " << result.report_path << std::endl;
    if (!result.trajectory_path.empty())
      std::cout << "trajectory written to " << result.trajectory_path << std::endl;
    if (cfg.task == "verify") {
      for (const auto& criterion : result.report["criteria"])
        std::cout << (criterion["passed"].get<bool>() ? "[PASS] " : "[FAIL] ")
                  << criterion["id"].get<int>() << ": "
                  << criterion["name"].get<std::string>() << " ("
                  << criterion["detail"].get<std::string>() << ")" << std::endl;
    }
    return result.exit_code;
  } catch (const pfgeom::Error& e) {
    std::cerr << pfgeom::error_json(e).dump() << std::endl;
    return pfgeom::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    nlohmann::json diag = {{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    std::cerr << diag.dump() << std::endl;
    return 2;
  }
}
