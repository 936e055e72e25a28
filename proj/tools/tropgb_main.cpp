#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tropgb/report.hpp"
#include "tropgb/runconfig.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Tropical Groebner bases of left ideals in the Weyl algebra"};

  std::string config_path;
  std::string algorithm_override;
  std::string stats_path;
  bool verify = false;

  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--algorithm", algorithm_override, "f5 | buchberger | both")
      ->check(CLI::IsMember({"f5", "buchberger", "both"}));
  app.add_flag("--verify", verify, "check the result with the division oracle");
  app.add_option("--stats-json", stats_path, "write the JSON report here ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  tropgb::RunConfig cfg;
  try {
    cfg = tropgb::RunConfig::from_file(config_path);
    if (!algorithm_override.empty())
      cfg.algorithm = tropgb::algorithm_from_string(algorithm_override);
    if (verify) cfg.verify = true;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  tropgb::RunReport report;
  try {
    report = tropgb::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << tropgb::render_text(report);

  if (!stats_path.empty()) {
    if (stats_path == "-") {
      std::cout << report.document.dump(2) << "\n";
    } else {
      std::ofstream out(stats_path);
      if (!out) {
        std::cerr << "error: cannot write '" << stats_path << "'\n";
        return 2;
      }
      out << report.document.dump(2) << "\n";
    }
  }

  if (report.verification_requested && !report.verification_ok) return 1;
  return 0;
}
