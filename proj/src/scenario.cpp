#include "weaklab/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "weaklab/parallel.hpp"

namespace weaklab {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) throw config_error(ctx + "." + key + ": required field missing");
  return j.at(key);
}

double require_number(const json& j, const std::string& key, const std::string& ctx) {
  const json& v = require_field(j, key, ctx);
  if (!v.is_number()) throw config_error(ctx + "." + key + ": must be a number");
  return v.get<double>();
}

Point point_from_json(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.empty() || v.size() > 3)
    throw config_error(ctx + ": must be an array of 1..3 coordinates");
  Point p;
  p.dim = static_cast<int>(v.size());
  for (size_t i = 0; i < v.size(); ++i) p.c[i] = v[i].get<double>();
  return p;
}

Space space_from_json(const json& j) {
  const std::string kind = require_field(j, "kind", "space").get<std::string>();
  Space s = Space::euclidean_lp(1, 2.0);
  if (kind == "euclidean") {
    const int dim = static_cast<int>(require_number(j, "dim", "space"));
    double q;
    const json& qv = require_field(j, "q", "space");
    if (qv.is_string()) {
      if (qv.get<std::string>() != "inf")
        throw config_error("space.q: must be a number or \"inf\"");
      q = std::numeric_limits<double>::infinity();
    } else {
      q = qv.get<double>();
    }
    s = Space::euclidean_lp(dim, q);
  } else if (kind == "weighted_line") {
    s = Space::weighted_line();
  } else if (kind == "heisenberg") {
    s = Space::heisenberg();
  } else if (kind == "hyperbolic_half_plane") {
    s = Space::hyperbolic_half_plane();
  } else if (kind == "oscillating_line") {
    const double m = require_number(j, "m", "space");
    const double M = require_number(j, "M", "space");
    std::vector<double> radii;
    if (j.contains("radii")) {
      radii = j.at("radii").get<std::vector<double>>();
    } else {
      const int count = static_cast<int>(require_number(j, "count", "space"));
      const double r1 = require_number(j, "r1", "space");
      radii = construct_oscillating_radii(m, M, 1, count, r1);
    }
    s = Space::oscillating_line(m, M, radii);
  } else if (kind == "finite_interval") {
    s = Space::finite_interval(require_number(j, "a", "space"),
                               require_number(j, "b", "space"));
  } else {
    throw config_error("space.kind: unknown value '" + kind + "'");
  }
  if (j.contains("base_point"))
    s = s.with_base_point(point_from_json(j.at("base_point"), "space.base_point"));
  return s;
}

GrowthFunction growth_from_json(const json& j) {
  const std::string kind = require_field(j, "kind", "growth").get<std::string>();
  if (kind == "power") return GrowthFunction::power(require_number(j, "s", "growth"));
  if (kind == "cosh_minus_one") return GrowthFunction::cosh_minus_one();
  if (kind == "table") {
    const json& pts = require_field(j, "points", "growth");
    std::vector<std::pair<double, double>> v;
    for (const auto& p : pts) v.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return GrowthFunction::monotone_table(std::move(v));
  }
  throw config_error("growth.kind: unknown value '" + kind + "'");
}

TestFunction testfn_from_json(const json& j) {
  const std::string kind = require_field(j, "kind", "u").get<std::string>();
  if (kind == "indicator_ball") {
    return TestFunction::indicator_ball(
        point_from_json(require_field(j, "center", "u"), "u.center"),
        require_number(j, "radius", "u"));
  }
  if (kind == "shifted_unit_interval") {
    return TestFunction::shifted_unit_interval(
        static_cast<int>(require_number(j, "n", "u")));
  }
  if (kind == "step_sum") {
    std::vector<Step> steps;
    for (const auto& st : require_field(j, "steps", "u"))
      steps.push_back({st.at(0).get<double>(), st.at(1).get<double>(),
                       st.at(2).get<double>()});
    return TestFunction::step_sum(std::move(steps));
  }
  if (kind == "zero") {
    if (j.contains("support_center")) {
      return TestFunction::zero_with_support(
          {point_from_json(j.at("support_center"), "u.support_center"),
           require_number(j, "support_radius", "u")});
    }
    return TestFunction::zero();
  }
  if (kind == "scaled") {
    return TestFunction::scaled(require_number(j, "c", "u"),
                                testfn_from_json(require_field(j, "inner", "u")));
  }
  throw config_error("u.kind: unknown value '" + kind + "'");
}

LimitCheck limit_check_from_json(const json& j) {
  LimitCheck lc;
  const std::string mode = require_field(j, "mode", "checks.limit").get<std::string>();
  if (mode == "none") {
    lc.mode = LimitCheck::Mode::None;
    return lc;
  }
  if (mode == "value") {
    lc.mode = LimitCheck::Mode::Value;
    if (j.contains("target")) {
      lc.target_auto = false;
      lc.target = j.at("target").get<double>();
    }
    lc.rel_tol = j.value("rel_tol", 0.0);
    lc.abs_tol = j.value("abs_tol", 0.0);
    if (lc.rel_tol == 0.0 && lc.abs_tol == 0.0)
      throw config_error("checks.limit: a value check needs rel_tol or abs_tol");
    return lc;
  }
  if (mode == "band") {
    lc.mode = LimitCheck::Mode::Band;
    return lc;
  }
  if (mode == "not_applicable") {
    lc.mode = LimitCheck::Mode::NotApplicable;
    return lc;
  }
  if (mode == "decay_to_zero") {
    lc.mode = LimitCheck::Mode::DecayToZero;
    lc.rel_tol = j.value("rel_tol", 0.0);
    if (lc.rel_tol == 0.0)
      throw config_error("checks.limit: decay_to_zero needs rel_tol");
    return lc;
  }
  throw config_error("checks.limit.mode: unknown value '" + mode + "'");
}

std::string expected_from_json(const json& checks, const std::string& key) {
  if (!checks.contains(key)) return "pass";
  const std::string v = checks.at(key).get<std::string>();
  if (v != "pass" && v != "fail" && v != "any")
    throw config_error("checks." + key + ": must be pass, fail or any");
  return v;
}

json estimate_to_json(const LevelSetEstimate& e) {
  return json{{"lambda", e.lambda},       {"value", e.value},
              {"std_err", e.std_err},     {"mass", e.mass},
              {"method", method_name(e.method)}, {"n_samples", e.n_samples}};
}

bool verdict_matches(const std::string& expected, VerdictStatus status) {
  if (expected == "any") return true;
  if (expected == "pass") return status == VerdictStatus::Pass;
  return status == VerdictStatus::Fail;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  Scenario sc;
  sc.echo = j;
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw config_error("version: scenario files must declare version 1");
  sc.name = require_field(j, "name", "scenario").get<std::string>();
  sc.space = space_from_json(require_field(j, "space", "scenario"));
  sc.u = testfn_from_json(require_field(j, "u", "scenario"));
  if (sc.u.fn_kind() == TestFnKind::StepSum && !sc.space.is_line_kind())
    throw config_error("u.kind: interval test functions require a line space kind");
  if (sc.u.support_bounded() &&
      sc.u.support_ball(sc.space).center.dim != sc.space.dim())
    throw config_error("u.center: coordinate count must match the space chart dimension");
  sc.p = require_number(j, "p", "scenario");
  if (!(sc.p >= 1.0)) throw config_error("p: must be >= 1");
  sc.growth = growth_from_json(require_field(j, "growth", "scenario"));
  // seed and budget are mandatory: reproducibility is not optional
  const json& seed = require_field(j, "seed", "scenario");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw config_error("seed: must be an integer");
  sc.seed = seed.get<uint64_t>();
  sc.budget = static_cast<uint64_t>(require_number(j, "budget", "scenario"));
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    LambdaGrid grid{require_number(g, "lambda_min", "grid"),
                    require_number(g, "lambda_max", "grid"),
                    static_cast<int>(require_number(g, "count", "grid"))};
    try {
      grid.validate();
    } catch (const std::invalid_argument& e) {
      throw config_error(std::string("grid: ") + e.what());
    }
    sc.grid = grid;
  }
  const std::string policy = j.value("method", "auto");
  if (policy == "auto")
    sc.policy = MethodPolicy::Auto;
  else if (policy == "exact")
    sc.policy = MethodPolicy::ExactOnly;
  else if (policy == "mc")
    sc.policy = MethodPolicy::MonteCarloOnly;
  else
    throw config_error("method: unknown value '" + policy + "'");
  if (sc.policy == MethodPolicy::MonteCarloOnly && sc.budget < 10000)
    throw config_error("budget: Monte Carlo policies need budget >= 10^4");

  try {
    sc.theorem = theorem_from_name(j.value("theorem", "avr_power"));
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("theorem: ") + e.what());
  }
  sc.profile = sc.space.default_profile();
  if (j.contains("profile")) {
    const json& pr = j.at("profile");
    if (pr.contains("C_a")) sc.profile.C_a = pr.at("C_a").get<double>();
    if (pr.contains("C_A")) sc.profile.C_A = pr.at("C_A").get<double>();
    if (pr.contains("C_d")) sc.profile.C_d = pr.at("C_d").get<double>();
    if (pr.contains("AVR")) sc.profile.AVR = pr.at("AVR").get<double>();
    if (pr.contains("total_mass_finite"))
      sc.profile.total_mass_finite = pr.at("total_mass_finite").get<bool>();
    if (sc.profile.C_a && sc.profile.C_A && *sc.profile.C_a > *sc.profile.C_A)
      throw config_error("profile: C_a must be <= C_A");
  }
  if (j.contains("checks")) {
    const json& ch = j.at("checks");
    sc.expected.upper = expected_from_json(ch, "upper");
    sc.expected.lower = expected_from_json(ch, "lower");
    if (ch.contains("limit")) sc.limit_check = limit_check_from_json(ch.at("limit"));
  }
  sc.run_regularity_section = j.value("regularity", false);
  if (j.contains("suites")) sc.suites = j.at("suites").get<std::vector<std::string>>();
  if (!sc.grid && !sc.run_regularity_section)
    throw config_error("scenario: needs a grid sweep or a regularity section");
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw config_error("scenario file does not parse: " + std::string(e.what()));
  }
  return scenario_from_json(j);
}

json run_scenario(const Scenario& sc, int workers) {
  json report;
  report["version"] = 1;
  report["scenario_echo"] = sc.echo;
  report["seed"] = sc.seed;

  uint64_t mc_samples = 0;
  bool all_ok = true;
  json verdicts = json::array();

  if (sc.grid) {
    SweepReport sw = sweep(sc.space, sc.u, sc.p, sc.growth, *sc.grid, sc.policy, sc.budget,
                           sc.seed, workers);
    check_bounds(sw, sc.profile, sc.theorem, sc.limit_check);

    json est = json::array();
    for (const auto& e : sw.estimates) {
      est.push_back(estimate_to_json(e));
      mc_samples += e.n_samples;
    }
    report["estimates"] = est;
    report["weak_norm_p"] = {{"value", sw.weak_norm.value},
                             {"std_err", sw.weak_norm.std_err},
                             {"argmax_lambda", sw.weak_norm.argmax_lambda},
                             {"at_lambda_min", sw.weak_norm.at_lambda_min}};
    report["limit"] = {{"value", sw.limit.value},
                       {"std_err", sw.limit.std_err},
                       {"applicable", sw.limit.applicable},
                       {"rel_residual", sw.limit.rel_residual},
                       {"decade_spread", sw.limit.decade_spread},
                       {"oscillation_detected", sw.limit.oscillation_detected},
                       {"points_used", sw.limit.points_used}};
    report["constants"] = {{"c1", sw.constants.c1},
                           {"c2", sw.constants.c2},
                           {"c3", sw.constants.has_c3 ? json(sw.constants.c3) : json()},
                           {"norm_p", sw.norm_p}};

    for (const Verdict& v : sw.verdicts) {
      std::string expected = "pass";
      if (v.claim == "upper_bound") expected = sc.expected.upper;
      if (v.claim == "lower_bound") expected = sc.expected.lower;
      const bool ok = verdict_matches(expected, v.status);
      all_ok = all_ok && ok;
      verdicts.push_back({{"claim", v.claim},
                          {"status", verdict_status_name(v.status)},
                          {"expected", expected},
                          {"ok", ok},
                          {"margin", v.margin},
                          {"note", v.note}});
    }
  }

  if (sc.run_regularity_section) {
    const RegularityReport rr = run_regularity(sc.space, sc.growth);
    json centers = json::array();
    for (const Point& c : rr.plan.centers) {
      json coords = json::array();
      for (int i = 0; i < c.dim; ++i) coords.push_back(c.c[i]);
      centers.push_back(coords);
    }
    report["regularity"] = {
        {"C_a_hat", rr.ahlfors.c_a_hat},
        {"C_A_hat", rr.ahlfors.c_A_hat},
        {"upper_ahlfors_divergent", rr.ahlfors.upper_divergent},
        {"lower_ahlfors_divergent", rr.ahlfors.lower_divergent},
        {"C_d_hat", rr.doubling.c_d_hat},
        {"dimension_hat", rr.doubling.dimension_hat},
        {"doubling_divergent", rr.doubling.divergent},
        {"AVR_hat", rr.avr.value},
        {"avr_converged", rr.avr.converged},
        {"avr_tail_min", rr.avr.tail_min},
        {"avr_tail_max", rr.avr.tail_max},
        {"avr_cross_x0_spread", rr.avr.cross_x0_spread},
        {"K_hat", rr.bishop_gromov.k_hat},
        {"bishop_gromov_stable", rr.bishop_gromov.stable},
        {"probe_plan", {{"centers", centers}, {"radii", rr.plan.radii}}},
        {"avr_schedule", rr.avr_schedule},
    };
    for (const RegularityVerdict& v : check_regularity(rr, sc.profile)) {
      all_ok = all_ok && v.pass;
      verdicts.push_back({{"claim", v.claim},
                          {"status", v.pass ? "pass" : "fail"},
                          {"expected", "pass"},
                          {"ok", v.pass},
                          {"margin", v.declared != 0.0
                                         ? (v.hat - v.declared) / v.declared
                                         : (v.pass ? 1.0 : -1.0)},
                          {"note", ""}});
    }
  }

  report["verdicts"] = verdicts;
  // wall-clock timing is deliberately not recorded: report files must be
  // byte-identical across reruns and worker counts
  report["timing"] = {{"grid_points", sc.grid ? sc.grid->count : 0},
                      {"mc_samples", mc_samples},
                      {"workers_invariant", true}};
  report["pass"] = all_ok;
  return report;
}

bool report_passed(const json& report) { return report.value("pass", false); }

std::string report_csv(const json& report) {
  std::ostringstream out;
  out << "lambda,D_value,std_err,mass,method,n_samples\n";
  if (!report.contains("estimates")) return out.str();
  char buf[512];
  for (const auto& e : report.at("estimates")) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%s,%llu\n",
                  e.at("lambda").get<double>(), e.at("value").get<double>(),
                  e.at("std_err").get<double>(), e.at("mass").get<double>(),
                  e.at("method").get<std::string>().c_str(),
                  static_cast<unsigned long long>(e.at("n_samples").get<uint64_t>()));
    out << buf;
  }
  return out.str();
}

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("WEAKLAB_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return hardware_workers();
}

namespace {

// Builtin scenarios are plain scenario JSON run through the same parser as
// user files; scenarios/ ships copies of the frequently used ones.
const char* kBuiltinScenarios = R"JSON([
{
  "version": 1,
  "name": "euclid1d_indicator",
  "suites": ["fast", "full"],
  "space": {"kind": "euclidean", "dim": 1, "q": 2},
  "u": {"kind": "indicator_ball", "center": [0.5], "radius": 0.5},
  "p": 1,
  "growth": {"kind": "power", "s": 1},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 48},
  "method": "exact",
  "budget": 10000,
  "seed": 1001,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.005}}
},
{
  "version": 1,
  "name": "euclid1d_indicator_p2",
  "suites": ["fast", "full"],
  "space": {"kind": "euclidean", "dim": 1, "q": 2},
  "u": {"kind": "indicator_ball", "center": [0.5], "radius": 0.5},
  "p": 2,
  "growth": {"kind": "power", "s": 1},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 48},
  "method": "exact",
  "budget": 10000,
  "seed": 1002,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.005}}
},
{
  "version": 1,
  "name": "euclid1d_indicator_mc",
  "suites": ["fast", "full"],
  "space": {"kind": "euclidean", "dim": 1, "q": 2},
  "u": {"kind": "indicator_ball", "center": [0.5], "radius": 0.5},
  "p": 1,
  "growth": {"kind": "power", "s": 1},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "mc",
  "budget": 1000000,
  "seed": 1003,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.02}}
},
{
  "version": 1,
  "name": "euclid2d_disk_exact",
  "suites": ["fast", "full"],
  "space": {"kind": "euclidean", "dim": 2, "q": 2},
  "u": {"kind": "indicator_ball", "center": [0, 0], "radius": 1},
  "p": 2,
  "growth": {"kind": "power", "s": 2},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "exact",
  "budget": 10000,
  "seed": 1004,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.005}}
},
{
  "version": 1,
  "name": "finite_interval_no_lower_bound",
  "suites": ["fast", "full"],
  "space": {"kind": "finite_interval", "a": 0, "b": 1},
  "u": {"kind": "step_sum", "steps": [[0.0, 0.25, 1.0]]},
  "p": 1,
  "growth": {"kind": "power", "s": 1},
  "theorem": "avr_power",
  "profile": {"AVR": 2.0, "C_A": 2.0},
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 48},
  "method": "exact",
  "budget": 10000,
  "seed": 1005,
  "checks": {"upper": "pass", "lower": "fail",
             "limit": {"mode": "decay_to_zero", "rel_tol": 0.01}}
},
{
  "version": 1,
  "name": "weighted_line_no_upper_bound",
  "suites": ["fast", "full"],
  "space": {"kind": "weighted_line"},
  "u": {"kind": "shifted_unit_interval", "n": 8},
  "p": 1,
  "growth": {"kind": "power", "s": 2},
  "theorem": "avr_power",
  "profile": {"C_A": 2.0},
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 48},
  "method": "exact",
  "budget": 10000,
  "seed": 1006,
  "checks": {"upper": "fail", "lower": "pass", "limit": {"mode": "none"}}
},
{
  "version": 1,
  "name": "oscillating_no_limit",
  "suites": ["fast", "full"],
  "space": {"kind": "oscillating_line", "m": 1, "M": 2, "count": 8, "r1": 1},
  "u": {"kind": "indicator_ball", "center": [0], "radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 1},
  "theorem": "ahlfors_power",
  "grid": {"lambda_min": 1e-5, "lambda_max": 4.0, "count": 56},
  "method": "exact",
  "budget": 10000,
  "seed": 1007,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "not_applicable"}}
},
{
  "version": 1,
  "name": "heisenberg_fast_mc",
  "suites": ["fast", "full"],
  "space": {"kind": "heisenberg"},
  "u": {"kind": "indicator_ball", "center": [0, 0, 0], "radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 4},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "mc",
  "budget": 400000,
  "seed": 1008,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.05}}
},
{
  "version": 1,
  "name": "hyperbolic_fast_mc",
  "suites": ["fast", "full"],
  "space": {"kind": "hyperbolic_half_plane"},
  "u": {"kind": "indicator_ball", "center": [0, 1], "radius": 1},
  "p": 1,
  "growth": {"kind": "cosh_minus_one"},
  "theorem": "avr_growth",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "mc",
  "budget": 400000,
  "seed": 1009,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.05}}
},
{
  "version": 1,
  "name": "oscillating_band",
  "suites": ["fast", "full"],
  "space": {"kind": "oscillating_line", "m": 1, "M": 2, "count": 8, "r1": 1},
  "u": {"kind": "indicator_ball", "center": [0], "radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 1},
  "theorem": "ahlfors_power",
  "grid": {"lambda_min": 1e-5, "lambda_max": 4.0, "count": 56},
  "method": "exact",
  "budget": 10000,
  "seed": 1010,
  "checks": {"upper": "pass", "lower": "pass", "limit": {"mode": "band"}}
},
{
  "version": 1,
  "name": "regularity_euclid_plane",
  "suites": ["fast", "full"],
  "space": {"kind": "euclidean", "dim": 2, "q": 2},
  "u": {"kind": "zero", "support_center": [0, 0], "support_radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 2},
  "budget": 10000,
  "seed": 1011,
  "regularity": true
},
{
  "version": 1,
  "name": "regularity_weighted_line",
  "suites": ["fast", "full"],
  "space": {"kind": "weighted_line"},
  "u": {"kind": "zero", "support_center": [0], "support_radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 2},
  "budget": 10000,
  "seed": 1012,
  "regularity": true
},
{
  "version": 1,
  "name": "regularity_heisenberg",
  "suites": ["fast", "full"],
  "space": {"kind": "heisenberg"},
  "u": {"kind": "zero", "support_center": [0, 0, 0], "support_radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 4},
  "budget": 10000,
  "seed": 1013,
  "regularity": true
},
{
  "version": 1,
  "name": "anisotropic_linf_limit",
  "suites": ["full"],
  "space": {"kind": "euclidean", "dim": 2, "q": "inf"},
  "u": {"kind": "indicator_ball", "center": [0, 0], "radius": 0.5},
  "p": 1,
  "growth": {"kind": "power", "s": 2},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "mc",
  "budget": 10000000,
  "seed": 1014,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.03}}
},
{
  "version": 1,
  "name": "heisenberg_gauge_limit",
  "suites": ["full"],
  "space": {"kind": "heisenberg"},
  "u": {"kind": "indicator_ball", "center": [0, 0, 0], "radius": 1},
  "p": 1,
  "growth": {"kind": "power", "s": 4},
  "theorem": "avr_power",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "mc",
  "budget": 10000000,
  "seed": 1015,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.05}}
},
{
  "version": 1,
  "name": "hyperbolic_cosh_limit",
  "suites": ["full"],
  "space": {"kind": "hyperbolic_half_plane"},
  "u": {"kind": "indicator_ball", "center": [0, 1], "radius": 1},
  "p": 1,
  "growth": {"kind": "cosh_minus_one"},
  "theorem": "avr_growth",
  "grid": {"lambda_min": 1e-4, "lambda_max": 4.0, "count": 40},
  "method": "mc",
  "budget": 10000000,
  "seed": 1016,
  "checks": {"upper": "pass", "lower": "pass",
             "limit": {"mode": "value", "rel_tol": 0.05}}
}
])JSON";

}  // namespace

std::vector<Scenario> builtin_scenarios(const std::string& suite) {
  if (suite != "fast" && suite != "full")
    throw config_error("suite: unknown value '" + suite + "' (use fast or full)");
  const json all = json::parse(kBuiltinScenarios);
  std::vector<Scenario> out;
  for (const auto& j : all) {
    Scenario sc = scenario_from_json(j);
    for (const std::string& s : sc.suites)
      if (s == suite) {
        out.push_back(sc);
        break;
      }
  }
  return out;
}

}  // namespace weaklab
