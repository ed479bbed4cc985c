#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "weaklab/asymptotics.hpp"
#include "weaklab/regularity.hpp"

namespace weaklab {

/// Scenario-file problems: exit code 2 territory.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExpectedVerdicts {
  // "pass" | "fail" | "any" per claim; limit handled through LimitCheck
  std::string upper = "pass";
  std::string lower = "pass";
  std::string limit = "pass";
};

struct Scenario {
  std::string name;
  nlohmann::json echo;  // the scenario exactly as given
  Space space = Space::euclidean_lp(1, 2.0);
  TestFunction u = TestFunction::zero();
  double p = 1.0;
  GrowthFunction growth = GrowthFunction::power(1.0);
  Theorem theorem = Theorem::AvrPower;
  DeclaredProfile profile;
  std::optional<LambdaGrid> grid;
  MethodPolicy policy = MethodPolicy::Auto;
  uint64_t budget = 0;
  uint64_t seed = 0;
  LimitCheck limit_check;
  ExpectedVerdicts expected;
  bool run_regularity_section = false;
  std::vector<std::string> suites;  // "fast" and/or "full"
};

Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

/// Runs the sweep (when a grid is present) and the optional regularity
/// section; the returned report is deterministic for a fixed (scenario, seed)
/// regardless of the worker count.
nlohmann::json run_scenario(const Scenario& sc, int workers);

/// True when every verdict matched its expectation.
bool report_passed(const nlohmann::json& report);

/// CSV with columns lambda, D_value, std_err, mass, method, n_samples.
std::string report_csv(const nlohmann::json& report);

std::vector<Scenario> builtin_scenarios(const std::string& suite);

/// Resolves the worker count: explicit flag > WEAKLAB_WORKERS > OpenMP default.
int resolve_workers(int flag_value);

}  // namespace weaklab
