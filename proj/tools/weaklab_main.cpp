#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "weaklab/scenario.hpp"

namespace fs = std::filesystem;
using weaklab::config_error;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot write " + path.string());
  out << text;
}

int cmd_run(const std::string& scenario_path, const std::string& out_path,
            const std::string& csv_path, int workers_flag) {
  const weaklab::Scenario sc = weaklab::load_scenario_file(scenario_path);
  const int workers = weaklab::resolve_workers(workers_flag);
  const nlohmann::json report = weaklab::run_scenario(sc, workers);
  write_text(out_path, report.dump(2) + "\n");
  if (!csv_path.empty()) write_text(csv_path, weaklab::report_csv(report));
  const bool ok = weaklab::report_passed(report);
  std::cout << sc.name << ": " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& out_dir, int workers_flag) {
  const auto scenarios = weaklab::builtin_scenarios(suite);
  const int workers = weaklab::resolve_workers(workers_flag);
  nlohmann::json aggregate;
  aggregate["version"] = 1;
  aggregate["suite"] = suite;
  nlohmann::json rows = nlohmann::json::array();
  bool all_ok = true;
  for (const auto& sc : scenarios) {
    const nlohmann::json report = weaklab::run_scenario(sc, workers);
    const bool ok = weaklab::report_passed(report);
    all_ok = all_ok && ok;
    const fs::path file = fs::path(out_dir) / ("scenario_" + sc.name + ".json");
    write_text(file, report.dump(2) + "\n");
    rows.push_back({{"name", sc.name}, {"pass", ok}});
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << sc.name << "\n";
  }
  aggregate["scenarios"] = rows;
  aggregate["all_pass"] = all_ok;
  write_text(fs::path(out_dir) / ("verify_" + suite + ".json"), aggregate.dump(2) + "\n");
  std::cout << "suite " << suite << ": " << (all_ok ? "all pass" : "FAILURES") << "\n";
  return all_ok ? 0 : 1;
}

int cmd_regularity(const std::string& scenario_path, const std::string& out_path,
                   int workers_flag) {
  weaklab::Scenario sc = weaklab::load_scenario_file(scenario_path);
  sc.run_regularity_section = true;
  sc.grid.reset();  // probes only
  const nlohmann::json report = weaklab::run_scenario(sc, weaklab::resolve_workers(workers_flag));
  write_text(out_path, report.dump(2) + "\n");
  std::cout << sc.name << ": regularity report written\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weaklab: level-set functionals D(lambda) on metric measure spaces"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, csv_path, suite, out_dir = "reports";
  int workers = 0;

  CLI::App* run = app.add_subcommand("run", "run one scenario file");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_path, "report JSON output")->required();
  run->add_option("--csv", csv_path, "optional curve CSV output");
  run->add_option("--workers", workers, "worker count (never changes results)");

  CLI::App* verify = app.add_subcommand("verify", "run a builtin scenario suite");
  verify->add_option("--suite", suite, "fast or full")->required();
  verify->add_option("--out-dir", out_dir, "directory for report files");
  verify->add_option("--workers", workers, "worker count (never changes results)");

  CLI::App* reg = app.add_subcommand("regularity", "regularity probes for a scenario");
  reg->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  reg->add_option("--out", out_path, "report JSON output")->required();
  reg->add_option("--workers", workers, "worker count (never changes results)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(scenario_path, out_path, csv_path, workers);
    if (verify->parsed()) return cmd_verify(suite, out_dir, workers);
    if (reg->parsed()) return cmd_regularity(scenario_path, out_path, workers);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
