#include "weaklab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "weaklab/rng.hpp"

namespace weaklab {

namespace {
constexpr double kDecadeSpreadTol = 0.05;
constexpr double kResidualTol = 0.05;
}  // namespace

std::vector<double> LambdaGrid::points() const {
  validate();
  std::vector<double> v(count);
  const double ratio = std::log(lambda_max / lambda_min) / (count - 1);
  for (int i = 0; i < count; ++i) v[i] = lambda_min * std::exp(ratio * i);
  v.front() = lambda_min;
  v.back() = lambda_max;
  return v;
}

void LambdaGrid::validate() const {
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min))
    throw std::invalid_argument("grid: need 0 < lambda_min < lambda_max");
  if (count < 8) throw std::invalid_argument("grid: count must be >= 8");
}

Theorem theorem_from_name(const std::string& name) {
  if (name == "avr_power") return Theorem::AvrPower;
  if (name == "ahlfors_power") return Theorem::AhlforsPower;
  if (name == "avr_growth") return Theorem::AvrGrowth;
  if (name == "ahlfors_growth") return Theorem::AhlforsGrowth;
  throw std::invalid_argument("theorem: unknown selector '" + name + "'");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::AvrPower:
      return "avr_power";
    case Theorem::AhlforsPower:
      return "ahlfors_power";
    case Theorem::AvrGrowth:
      return "avr_growth";
    case Theorem::AhlforsGrowth:
      return "ahlfors_growth";
  }
  return "?";
}

std::string verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass:
      return "pass";
    case VerdictStatus::Fail:
      return "fail";
    case VerdictStatus::NotApplicable:
      return "not_applicable";
  }
  return "?";
}

SweepReport sweep(const Space& space, const TestFunction& u, double p,
                  const GrowthFunction& growth, const LambdaGrid& grid,
                  MethodPolicy policy, uint64_t budget, uint64_t seed, int workers) {
  grid.validate();
  SweepReport report;
  report.p = p;
  report.grid = grid;
  report.budget = budget;
  report.seed = seed;
  report.norm_p = u.lp_norm_p(space, p);

  const std::vector<double> lambdas = grid.points();
  LevelSetQuery q{space, u, p, growth, lambdas.front()};
  validate_query(q);

  const bool can_1d = exact_1d_supported(q);
  const bool can_ind = exact_indicator_supported(q);
  bool use_mc = false;
  switch (policy) {
    case MethodPolicy::Auto:
      use_mc = !(can_1d || can_ind);
      break;
    case MethodPolicy::ExactOnly:
      if (!(can_1d || can_ind))
        throw std::invalid_argument("sweep: exact policy but no exact method applies");
      use_mc = false;
      break;
    case MethodPolicy::MonteCarloOnly:
      use_mc = true;
      break;
  }
  uint64_t per_point = 0;
  if (use_mc) {
    per_point = budget / lambdas.size();
    if (per_point < 10000)
      throw std::invalid_argument("sweep: budget below 10^4 samples per grid point");
  }

  report.estimates.reserve(lambdas.size());
  for (size_t i = 0; i < lambdas.size(); ++i) {
    q.lambda = lambdas[i];
    if (use_mc) {
      report.estimates.push_back(mc_mass(q, per_point, mix64(seed, i), workers));
    } else if (can_1d) {
      report.estimates.push_back(exact_mass_1d(q));
    } else {
      report.estimates.push_back(exact_mass_indicator(q));
    }
  }
  report.weak_norm = weak_norm_p(report.estimates);
  try {
    report.limit = limit_at_zero(report.estimates, p);
  } catch (const std::invalid_argument&) {
    report.limit = LimitEstimate{};  // grid too coarse for a fit: not applicable
  }
  return report;
}

WeakNormEstimate weak_norm_p(const std::vector<LevelSetEstimate>& estimates) {
  if (estimates.empty()) throw std::invalid_argument("weak_norm_p: empty report");
  size_t best = 0;
  double lam_min = estimates[0].lambda;
  for (size_t i = 0; i < estimates.size(); ++i) {
    lam_min = std::min(lam_min, estimates[i].lambda);
    if (estimates[i].value > estimates[best].value) best = i;
  }
  WeakNormEstimate w;
  w.value = estimates[best].value;
  w.std_err = estimates[best].std_err;
  w.argmax_lambda = estimates[best].lambda;
  w.at_lambda_min = estimates[best].lambda == lam_min;
  return w;
}

LimitEstimate limit_at_zero(const std::vector<LevelSetEstimate>& estimates, double p) {
  if (estimates.empty()) throw std::invalid_argument("limit_at_zero: empty report");
  std::vector<LevelSetEstimate> sorted = estimates;
  std::sort(sorted.begin(), sorted.end(),
            [](const LevelSetEstimate& a, const LevelSetEstimate& b) {
              return a.lambda < b.lambda;
            });
  const double lam0 = sorted.front().lambda;

  std::vector<const LevelSetEstimate*> decade;
  for (const auto& e : sorted)
    if (e.lambda <= 10.0 * lam0 * (1.0 + 1e-12)) decade.push_back(&e);
  if (decade.size() < 8)
    throw std::invalid_argument("limit_at_zero: need >= 8 grid points in the smallest decade");

  // weighted least squares on {1, lambda^p}
  double max_d = 0.0, max_se = 0.0;
  for (const auto* e : decade) {
    max_d = std::max(max_d, std::abs(e->value));
    max_se = std::max(max_se, e->std_err);
  }
  const bool exact = max_se == 0.0;
  double sw = 0, swx = 0, swxx = 0, swy = 0, swxy = 0;
  for (const auto* e : decade) {
    const double x = std::pow(e->lambda, p);
    const double wi = exact ? 1.0 : 1.0 / (e->std_err * e->std_err + 1e-24 * max_d * max_d);
    sw += wi;
    swx += wi * x;
    swxx += wi * x * x;
    swy += wi * e->value;
    swxy += wi * x * e->value;
  }
  const double det = sw * swxx - swx * swx;
  LimitEstimate lim;
  lim.points_used = static_cast<int>(decade.size());
  if (det == 0.0) throw std::invalid_argument("limit_at_zero: degenerate fit");
  lim.value = (swxx * swy - swx * swxy) / det;
  const double slope = (sw * swxy - swx * swy) / det;

  double rss = 0.0;
  for (const auto* e : decade) {
    const double fit = lim.value + slope * std::pow(e->lambda, p);
    rss += (e->value - fit) * (e->value - fit);
  }
  double cov00 = swxx / det;
  if (exact) {
    const double s2 = rss / std::max<int>(1, lim.points_used - 2);
    cov00 *= s2 * sw / lim.points_used;  // scale the unit weights by the residual variance
  }
  lim.std_err = std::sqrt(std::max(cov00, 0.0));
  const double den = std::max({std::abs(lim.value), max_d, 1e-300});
  lim.rel_residual = std::sqrt(rss / lim.points_used) / den;

  // oscillation check over the three smallest decades, when present
  std::vector<double> means;
  for (int d = 0; d < 3; ++d) {
    const double lo = lam0 * std::pow(10.0, d);
    const double hi = lam0 * std::pow(10.0, d + 1);
    double s = 0.0;
    int n = 0;
    for (const auto& e : sorted)
      if (e.lambda >= lo * (1 - 1e-12) && e.lambda < hi) {
        s += e.value;
        ++n;
      }
    if (n >= 2) means.push_back(s / n);
  }
  if (means.size() == 3) {
    const double m = (means[0] + means[1] + means[2]) / 3.0;
    const double spread = *std::max_element(means.begin(), means.end()) -
                          *std::min_element(means.begin(), means.end());
    lim.decade_spread = spread / std::max(std::abs(m), 1e-300);
    lim.oscillation_detected = lim.decade_spread > kDecadeSpreadTol;
  }
  lim.applicable = !lim.oscillation_detected && lim.rel_residual <= kResidualTol;
  return lim;
}

std::vector<Verdict> check_bounds(SweepReport& report, const DeclaredProfile& profile,
                                  Theorem theorem, const LimitCheck& limit_check) {
  auto need = [&](const std::optional<double>& v, const char* name) {
    if (!v)
      throw std::runtime_error(std::string("check_bounds: declared profile misses ") + name);
    return *v;
  };
  TheoremConstants& c = report.constants;
  const double two_pow = std::pow(2.0, report.p + 1.0);
  switch (theorem) {
    case Theorem::AvrPower:
    case Theorem::AvrGrowth:
      c.c1 = 2.0 * need(profile.AVR, "AVR");
      c.c2 = two_pow * need(profile.C_A, "C_A");
      c.c3 = c.c1;
      c.has_c3 = true;
      break;
    case Theorem::AhlforsPower:
    case Theorem::AhlforsGrowth:
      c.c1 = 2.0 * need(profile.C_a, "C_a");
      c.c2 = two_pow * need(profile.C_A, "C_A");
      c.band_lo = 2.0 * need(profile.C_a, "C_a");
      c.band_hi = 2.0 * need(profile.C_A, "C_A");
      c.has_band = true;
      break;
  }

  std::vector<Verdict> verdicts;
  const double normp = report.norm_p;

  {  // upper: every grid point below c2 ||u||^p (+3 SE)
    Verdict v{"upper_bound", VerdictStatus::Pass, std::numeric_limits<double>::infinity(), ""};
    const double bound = c.c2 * normp;
    for (const auto& e : report.estimates) {
      const double slack = bound + 3.0 * e.std_err;
      const double margin = (slack - e.value) / std::max(bound, 1e-300);
      if (margin < v.margin) v.margin = margin;
      if (e.value > slack) v.status = VerdictStatus::Fail;
    }
    if (v.status == VerdictStatus::Fail) v.note = "a grid point exceeds c2||u||^p";
    verdicts.push_back(v);
  }

  {  // lower: sup over lambda of D at least c1 ||u||^p (-3 SE); the converged
     // limit is itself a lower bound for the sup
    Verdict v{"lower_bound", VerdictStatus::Pass, 0.0, ""};
    const double bound = c.c1 * normp;
    double est = report.weak_norm.value;
    double se = report.weak_norm.std_err;
    if (report.limit.applicable && report.limit.value > est) {
      est = report.limit.value;
      se = report.limit.std_err;
    }
    const double tol = std::max(1e-6 * bound, 3.0 * se);
    v.margin = (est - (bound - tol)) / std::max(bound, 1e-300);
    if (est < bound - tol) v.status = VerdictStatus::Fail;
    if (profile.total_mass_finite) {
      v.note = (v.status == VerdictStatus::Fail)
                   ? "fails as expected: the lower bound is not asserted on finite-measure spaces"
                   : "finite-measure space: the lower bound is not asserted";
    } else if (v.status == VerdictStatus::Fail) {
      v.note = "weak norm below c1||u||^p";
    }
    verdicts.push_back(v);
  }

  if (limit_check.mode != LimitCheck::Mode::None) {
    Verdict v{"limit", VerdictStatus::Pass, 0.0, ""};
    const LimitEstimate& lim = report.limit;
    switch (limit_check.mode) {
      case LimitCheck::Mode::Value: {
        if (!c.has_c3 && limit_check.target_auto)
          throw std::runtime_error("check_bounds: limit value check needs c3 (avr_power/avr_growth)");
        const double target = limit_check.target_auto ? c.c3 * normp : limit_check.target;
        const double tol = limit_check.rel_tol * std::abs(target) + limit_check.abs_tol +
                           3.0 * lim.std_err;
        if (!lim.applicable) {
          v.status = VerdictStatus::Fail;
          v.note = "limit did not converge";
        } else {
          const double err = std::abs(lim.value - target);
          v.margin = (tol - err) / std::max(std::abs(target), 1e-300);
          if (err > tol) {
            v.status = VerdictStatus::Fail;
            v.note = "limit misses target";
          }
        }
        break;
      }
      case LimitCheck::Mode::Band: {
        const double lo = c.band_lo * normp, hi = c.band_hi * normp;
        const double lam0 = report.limit.points_used > 0
                                ? report.estimates.front().lambda
                                : report.grid.lambda_min;
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& e : report.estimates) {
          if (e.lambda > 10.0 * lam0 * (1 + 1e-12)) continue;
          const double m_lo = (e.value - (lo - 3.0 * e.std_err)) / std::max(hi, 1e-300);
          const double m_hi = ((hi + 3.0 * e.std_err) - e.value) / std::max(hi, 1e-300);
          worst = std::min({worst, m_lo, m_hi});
        }
        v.margin = worst;
        if (worst < 0.0) {
          v.status = VerdictStatus::Fail;
          v.note = "limit-decade values leave the [2C_a, 2C_A]||u||^p band";
        }
        break;
      }
      case LimitCheck::Mode::NotApplicable:
        if (lim.applicable) {
          v.status = VerdictStatus::Fail;
          v.note = "a limit emerged where non-convergence was expected";
        } else {
          v.status = VerdictStatus::Pass;
          v.note = "non-convergence detected as expected";
          v.margin = lim.decade_spread;
        }
        break;
      case LimitCheck::Mode::DecayToZero: {
        // final-decade mean of D against rel_tol * 2||u||^p
        const double lam0 = report.estimates.empty() ? report.grid.lambda_min
                                                     : report.estimates.front().lambda;
        double s = 0.0;
        int n = 0;
        for (const auto& e : report.estimates)
          if (e.lambda <= 10.0 * lam0 * (1 + 1e-12)) {
            s += e.value;
            ++n;
          }
        const double mean = n > 0 ? s / n : 0.0;
        const double thr = limit_check.rel_tol * 2.0 * normp;
        v.margin = (thr - mean) / std::max(thr, 1e-300);
        if (!(mean < thr)) {
          v.status = VerdictStatus::Fail;
          v.note = "final-decade mean does not vanish";
        } else {
          v.note = "final-decade mean vanishes";
        }
        break;
      }
      case LimitCheck::Mode::None:
        break;
    }
    verdicts.push_back(v);
  }

  report.verdicts = verdicts;
  return verdicts;
}

}  // namespace weaklab
