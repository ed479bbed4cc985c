#pragma once

#include <cstdint>
#include <string>

#include "weaklab/growth.hpp"
#include "weaklab/space.hpp"
#include "weaklab/testfn.hpp"

namespace weaklab {

enum class EstimateMethod { Exact1D, ExactIndicator, MonteCarlo };
std::string method_name(EstimateMethod m);

struct LevelSetQuery {
  Space space;
  TestFunction u;
  double p = 1.0;
  GrowthFunction growth = GrowthFunction::power(1.0);
  double lambda = 1.0;
};

/// One value of D(lambda) = lambda^p * (nu x nu)(E_lambda), with method tag,
/// sample count and standard error (0 for exact methods).
struct LevelSetEstimate {
  double lambda = 0.0;
  double value = 0.0;    // D(lambda)
  double std_err = 0.0;  // standard error of value
  double mass = 0.0;     // (nu x nu)(E_lambda)
  EstimateMethod method = EstimateMethod::Exact1D;
  uint64_t n_samples = 0;
};

/// Membership in E_lambda: x != y and |u(x)-u(y)| >= lambda f(d(x,y))^{1/p}.
/// The diagonal is excluded (both sides vanish; the diagonal is null for the
/// atomless built-in measures).
bool in_level_set(const LevelSetQuery& q, const Point& x, const Point& y);

bool exact_1d_supported(const LevelSetQuery& q);
bool exact_indicator_supported(const LevelSetQuery& q);

/// Exact product-measure mass on line kinds for piecewise-constant u: E_lambda
/// decomposes into finitely many strips {x in I, y in J, |x-y| <= r}, each
/// integrated exactly against the weight.
LevelSetEstimate exact_mass_1d(const LevelSetQuery& q);

/// Same decomposition restricted to the half set d(x0,y) > d(x0,x).
LevelSetEstimate exact_half_mass_1d(const LevelSetQuery& q);

/// mass = 2 int_S [nu(B(x,r)) - nu(B(x,r) ∩ S)] dnu(x) for indicator-ball u;
/// exact ball/intersection volumes, adaptive quadrature over S (rel 1e-8).
LevelSetEstimate exact_mass_indicator(const LevelSetQuery& q);

/// Stratified importance-sampled Monte Carlo estimate of D(lambda).
/// Stratum A: both points drawn from the support-region mixture.
/// Stratum B: x from the support region, y nu-uniform in B(x, R_max) with
/// R_max = f^{-1}((2 sup|u| / lambda)^p); beyond that radius membership is
/// impossible. Counted with factor 2 and overlap-corrected against stratum A
/// by an explicit 1{y not in D} indicator. Deterministic for fixed
/// (seed, budget) regardless of the worker count.
LevelSetEstimate mc_mass(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                         int workers = 1);

/// Monte Carlo estimate of (nu x nu)(H_lambda), H = E ∩ {d(x0,y) > d(x0,x)}.
LevelSetEstimate mc_half_mass(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                              int workers = 1);

/// Half-set mass by the best available method (exact on line kinds).
LevelSetEstimate half_set_mass(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                               int workers = 1);

/// Throws std::invalid_argument when lambda/p/growth are unusable.
void validate_query(const LevelSetQuery& q);

}  // namespace weaklab
