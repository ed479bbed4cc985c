#pragma once

#include <vector>

#include "weaklab/growth.hpp"
#include "weaklab/space.hpp"

namespace weaklab {

/// Explicit probe plan; estimates are extremal statistics over these probes,
/// so C_A/K hats are certified lower bounds and C_a hats upper bounds.
struct ProbePlan {
  std::vector<Point> centers;
  std::vector<double> radii;  // log grid
  /// Plan with both the center window and the radius window doubled, used for
  /// divergence detection.
  ProbePlan doubled() const;
};

ProbePlan default_probe_plan(const Space& space);

struct AhlforsHats {
  double c_a_hat = 0.0, c_A_hat = 0.0;
  bool upper_divergent = false;  // hat grows > 10% under window doubling
  bool lower_divergent = false;  // lower hat sinks > 10% under window doubling
  double upper_window_growth = 0.0;
};

AhlforsHats estimate_ahlfors(const Space& space, const GrowthFunction& growth,
                             const ProbePlan& plan);

struct DoublingHat {
  double c_d_hat = 0.0;
  double dimension_hat = 0.0;  // log2 of the hat
  bool divergent = false;
};

DoublingHat estimate_doubling(const Space& space, const ProbePlan& plan);

struct AvrEstimate {
  double value = 0.0;  // tail value of nu(B(x0,r))/f(r)
  double std_err = 0.0;
  bool converged = false;
  double tail_min = 0.0, tail_max = 0.0;  // over the schedule tail
  double cross_x0_spread = 0.0;
};

/// Tail of nu(B(x0,r))/f(r) along a geometric radius schedule (>= 6 points),
/// with a Cauchy-tail diagnostic and the cross-center spread.
AvrEstimate estimate_avr(const Space& space, const GrowthFunction& growth,
                         const std::vector<Point>& centers,
                         const std::vector<double>& r_schedule);

struct BishopGromovResult {
  double k_hat = 0.0;
  bool stable = true;  // hat grew <= 10% under window doubling
};

BishopGromovResult check_bishop_gromov(const Space& space, double s, const ProbePlan& plan);

/// Radius sequence r_n = (M n)^{1/N} r_{n-1} + 1 for the oscillating profile,
/// enlarged (doubling) until the even/odd volume-ratio targets hold at both
/// r_n and r_n - 1.
std::vector<double> construct_oscillating_radii(double m, double M, int N, int count,
                                                double r1);

double omega_n(int N);  // Lebesgue volume of the Euclidean unit ball

struct RegularityReport {
  AhlforsHats ahlfors;
  DoublingHat doubling;
  AvrEstimate avr;
  BishopGromovResult bishop_gromov;
  ProbePlan plan;                    // probes are explicit and logged
  std::vector<double> avr_schedule;  // radius schedule used for the AVR tail
};

RegularityReport run_regularity(const Space& space, const GrowthFunction& growth);

struct RegularityVerdict {
  std::string claim;
  bool pass = false;
  double hat = 0.0, declared = 0.0;
};

/// Hats against the declared constants at 1% relative tolerance; a declared
/// missing C_A is confirmed by the upper-divergence flag.
std::vector<RegularityVerdict> check_regularity(const RegularityReport& report,
                                                const DeclaredProfile& profile);

}  // namespace weaklab
