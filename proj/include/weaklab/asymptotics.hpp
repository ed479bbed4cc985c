#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weaklab/levelset.hpp"

namespace weaklab {

struct LambdaGrid {
  double lambda_min = 0.0, lambda_max = 0.0;
  int count = 0;  // >= 8, geometric spacing
  std::vector<double> points() const;
  void validate() const;
};

enum class MethodPolicy { Auto, ExactOnly, MonteCarloOnly };
enum class Theorem { AvrPower, AhlforsPower, AvrGrowth, AhlforsGrowth };

Theorem theorem_from_name(const std::string& name);
std::string theorem_name(Theorem t);

struct WeakNormEstimate {
  double value = 0.0;
  double std_err = 0.0;
  double argmax_lambda = 0.0;
  bool at_lambda_min = false;  // sup likely approached only as lambda -> 0
};

struct LimitEstimate {
  double value = 0.0;
  double std_err = 0.0;
  bool applicable = false;  // false when the curve does not settle
  double rel_residual = 0.0;
  double decade_spread = 0.0;
  bool oscillation_detected = false;
  int points_used = 0;
};

enum class VerdictStatus { Pass, Fail, NotApplicable };
std::string verdict_status_name(VerdictStatus s);

struct Verdict {
  std::string claim;  // "upper_bound" | "lower_bound" | "limit"
  VerdictStatus status = VerdictStatus::NotApplicable;
  double margin = 0.0;  // signed relative slack, >= 0 means satisfied
  std::string note;
};

struct TheoremConstants {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double band_lo = 0.0, band_hi = 0.0;  // limit band for the sandwich variants
  bool has_c3 = false, has_band = false;
};

/// How the limit verdict is judged; tolerances are pinned by the scenario.
struct LimitCheck {
  enum class Mode { None, Value, Band, NotApplicable, DecayToZero } mode = Mode::None;
  double target = 0.0;  // used when target_auto is false
  bool target_auto = true;  // target = c3 * ||u||_p^p
  double rel_tol = 0.0;
  double abs_tol = 0.0;
};

struct SweepReport {
  double p = 1.0;
  LambdaGrid grid;
  uint64_t budget = 0, seed = 0;
  std::vector<LevelSetEstimate> estimates;
  double norm_p = 0.0;  // ||u||_p^p
  WeakNormEstimate weak_norm;
  LimitEstimate limit;
  TheoremConstants constants;
  std::vector<Verdict> verdicts;
};

/// One estimate per grid point with the best available method under the
/// policy (exact_1d > exact_indicator > monte_carlo); the Monte Carlo budget
/// is split evenly across Monte Carlo grid points.
SweepReport sweep(const Space& space, const TestFunction& u, double p,
                  const GrowthFunction& growth, const LambdaGrid& grid,
                  MethodPolicy policy, uint64_t budget, uint64_t seed, int workers);

/// Grid sup of D with the standard error of the argmax point.
WeakNormEstimate weak_norm_p(const std::vector<LevelSetEstimate>& estimates);

/// Fits D(lambda) = c3 + a lambda^p over the smallest decade (>= 8 points
/// required) and refuses when the tail has not settled: relative residual
/// above 5% or decade-wise means of the last three decades spreading more
/// than 5%.
LimitEstimate limit_at_zero(const std::vector<LevelSetEstimate>& estimates, double p);

/// Evaluates the upper/lower/limit claims of the selected theorem against the
/// declared profile. The lower check may use the converged limit as a
/// certified lower bound for the sup (sup >= lim as lambda -> 0).
std::vector<Verdict> check_bounds(SweepReport& report, const DeclaredProfile& profile,
                                  Theorem theorem, const LimitCheck& limit_check);

}  // namespace weaklab
