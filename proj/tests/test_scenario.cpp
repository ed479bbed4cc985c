#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "weaklab/scenario.hpp"

using namespace weaklab;
using nlohmann::json;

namespace {

json minimal_scenario() {
  return json::parse(R"({
    "version": 1,
    "name": "t",
    "space": {"kind": "euclidean", "dim": 1, "q": 2},
    "u": {"kind": "indicator_ball", "center": [0.5], "radius": 0.5},
    "p": 1,
    "growth": {"kind": "power", "s": 1},
    "theorem": "avr_power",
    "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 48},
    "method": "exact",
    "budget": 10000,
    "seed": 7,
    "checks": {"upper": "pass", "lower": "pass",
               "limit": {"mode": "value", "rel_tol": 0.005}}
  })");
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("config errors name the offending field") {
  {
    json j = minimal_scenario();
    j["space"]["kind"] = "banach";
    CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("space.kind"),
                         config_error);
  }
  {
    json j = minimal_scenario();
    j["growth"]["kind"] = "exp";
    CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("growth.kind"),
                         config_error);
  }
  {
    json j = minimal_scenario();
    j["u"]["kind"] = "bump";
    CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("u.kind"), config_error);
  }
  {
    json j = minimal_scenario();
    j.erase("seed");  // reproducibility is mandatory
    CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("seed"), config_error);
  }
  {
    json j = minimal_scenario();
    j.erase("budget");
    CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("budget"), config_error);
  }
  {
    json j = minimal_scenario();
    j["method"] = "mc";
    j["budget"] = 500;
    CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("budget"), config_error);
  }
}

TEST_CASE("run produces the documented report fields and passes") {
  const Scenario sc = scenario_from_json(minimal_scenario());
  const json rep = run_scenario(sc, 2);
  for (const char* key : {"version", "scenario_echo", "seed", "estimates", "weak_norm_p",
                          "limit", "constants", "verdicts", "timing", "pass"})
    CHECK(rep.contains(key));
  CHECK(report_passed(rep));
  CHECK(rep["limit"]["value"].get<double>() == doctest::Approx(4.0).epsilon(0.005));
  CHECK(rep["estimates"].size() == 48);
}

TEST_CASE("a verdict that contradicts its expectation fails the report") {
  json j = minimal_scenario();
  j["checks"]["upper"] = "fail";  // the bound actually holds here
  const Scenario sc = scenario_from_json(j);
  CHECK_FALSE(report_passed(run_scenario(sc, 1)));
}

TEST_CASE("reports are deterministic across runs and worker counts") {
  json j = minimal_scenario();
  j["method"] = "mc";
  j["budget"] = 500000;
  j["grid"] = {{"lambda_min", 1e-3}, {"lambda_max", 4.0}, {"count", 32}};
  const Scenario sc = scenario_from_json(j);
  const std::string a = run_scenario(sc, 1).dump();
  const std::string b = run_scenario(sc, 1).dump();
  const std::string c = run_scenario(sc, 4).dump();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("csv columns") {
  const Scenario sc = scenario_from_json(minimal_scenario());
  const std::string csv = report_csv(run_scenario(sc, 1));
  CHECK(csv.rfind("lambda,D_value,std_err,mass,method,n_samples\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 49);  // header + 48 rows
  CHECK(csv.find("exact_1d") != std::string::npos);
}

TEST_CASE("builtin suites") {
  CHECK_THROWS_AS(builtin_scenarios("quick"), config_error);
  const auto fast = builtin_scenarios("fast");
  const auto full = builtin_scenarios("full");
  CHECK(fast.size() >= 10);
  CHECK(full.size() > fast.size());
  for (const auto& sc : fast) CHECK(sc.seed != 0);
}

TEST_CASE("scenario file round trip through disk") {
  const std::string path = "test_scenario_roundtrip.json";
  {
    std::ofstream out(path);
    out << minimal_scenario().dump(2);
  }
  const Scenario sc = load_scenario_file(path);
  CHECK(sc.name == "t");
  CHECK(report_passed(run_scenario(sc, 1)));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_scenario_file("no_such_file.json"), config_error);
}

TEST_CASE("workers resolution") {
  CHECK(resolve_workers(3) == 3);
  CHECK(resolve_workers(0) >= 1);
  setenv("WEAKLAB_WORKERS", "5", 1);
  CHECK(resolve_workers(0) == 5);
  CHECK(resolve_workers(2) == 2);  // explicit flag wins
  unsetenv("WEAKLAB_WORKERS");
}

}  // TEST_SUITE
