#include "weaklab/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace weaklab {

namespace {

constexpr double kWindowGrowthTol = 0.10;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, i / double(n - 1));
  return v;
}

// exact integral of the radial two-level profile over B(0, r) in R^N
double annuli_ball_volume(const std::vector<double>& radii, double low, double high, int N,
                          double r) {
  const double w = omega_n(N);
  double total = 0.0, prev = 0.0;
  for (size_t i = 0; i < radii.size(); ++i) {
    const double level = (i % 2 == 0) ? low : high;  // annulus i+1
    const double hi = std::min(r, radii[i]);
    if (hi > prev) total += level * w * (std::pow(hi, N) - std::pow(prev, N));
    prev = radii[i];
    if (r <= radii[i]) return total;
  }
  const double level = (radii.size() % 2 == 0) ? low : high;
  if (r > prev) total += level * w * (std::pow(r, N) - std::pow(prev, N));
  return total;
}

}  // namespace

double omega_n(int N) {
  switch (N) {
    case 1:
      return 2.0;
    case 2:
      return std::numbers::pi;
    case 3:
      return 4.0 * std::numbers::pi / 3.0;
    default:
      return std::exp(N * std::log(std::numbers::pi) / 2.0 - std::lgamma(1.0 + N / 2.0));
  }
}

ProbePlan ProbePlan::doubled() const {
  ProbePlan d;
  d.centers = centers;
  for (Point p : centers) {
    for (int i = 0; i < p.dim; ++i) p.c[i] *= 2.0;
    d.centers.push_back(p);
  }
  d.radii = radii;
  for (double r : radii) d.radii.push_back(2.0 * r);
  // keep maps valid for the half-plane (y is scaled away from 0 only)
  return d;
}

ProbePlan default_probe_plan(const Space& space) {
  ProbePlan plan;
  switch (space.kind()) {
    case SpaceKind::EuclideanLp:
    case SpaceKind::WeightedLine:
    case SpaceKind::OscillatingLine: {
      const int dim = space.dim();
      std::vector<double> offsets{0.0, 1.0, -1.0, 4.0, -4.0, 16.0, -16.0, 64.0, -64.0,
                                  256.0, -256.0, 2.0, -2.0, 8.0, -8.0, 32.0};
      for (double o : offsets) {
        Point p = space.base_point();
        p.c[0] = o;
        if (dim > 1) p.c[1] = o / 2.0;
        plan.centers.push_back(p);
      }
      plan.radii = log_grid(1e-2, 1e4, 25);
      break;
    }
    case SpaceKind::Heisenberg: {
      const double offs[4] = {0.0, 1.0, -3.0, 10.0};
      for (double a : offs)
        for (double b : offs)
          plan.centers.push_back(Point::p3(a, b, a * b / 2.0));
      plan.radii = log_grid(1e-2, 1e4, 25);
      break;
    }
    case SpaceKind::HyperbolicHalfPlane: {
      const double xs[4] = {0.0, 1.0, -2.0, 5.0};
      const double ys[4] = {1.0, 0.5, 2.0, 8.0};
      for (double x : xs)
        for (double y : ys) plan.centers.push_back(Point::p2(x, y));
      plan.radii = log_grid(1e-2, 40.0, 25);
      break;
    }
    case SpaceKind::FiniteInterval: {
      auto [a, b] = space.finite_interval_bounds();
      for (int i = 0; i < 16; ++i)
        plan.centers.push_back(Point::p1(a + (b - a) * (i + 0.5) / 16.0));
      plan.radii = log_grid(1e-4 * (b - a), 2.0 * (b - a), 25);
      break;
    }
  }
  return plan;
}

namespace {

// probes outside the chart (clamped windows, doubled plans) are skipped
std::optional<double> try_ball_volume(const Space& space, const Point& c, double r) {
  try {
    return space.ball_volume(c, r);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

AhlforsHats ahlfors_on_plan(const Space& space, const GrowthFunction& growth,
                            const ProbePlan& plan) {
  AhlforsHats h;
  h.c_a_hat = std::numeric_limits<double>::infinity();
  h.c_A_hat = 0.0;
  for (const Point& c : plan.centers) {
    for (double r : plan.radii) {
      double fr;
      try {
        fr = growth.eval(r);
      } catch (const std::invalid_argument&) {
        continue;  // beyond a table's domain
      }
      if (!(fr > 0.0)) continue;
      const auto vol = try_ball_volume(space, c, r);
      if (!vol) continue;
      const double ratio = *vol / fr;
      h.c_a_hat = std::min(h.c_a_hat, ratio);
      h.c_A_hat = std::max(h.c_A_hat, ratio);
    }
  }
  return h;
}

}  // namespace

AhlforsHats estimate_ahlfors(const Space& space, const GrowthFunction& growth,
                             const ProbePlan& plan) {
  if (plan.centers.size() < 16 || plan.radii.size() < 16)
    throw std::invalid_argument("estimate_ahlfors: need >= 16 centers and >= 16 radii");
  AhlforsHats base = ahlfors_on_plan(space, growth, plan);
  AhlforsHats wide = ahlfors_on_plan(space, growth, plan.doubled());
  base.upper_window_growth = (wide.c_A_hat - base.c_A_hat) / std::max(base.c_A_hat, 1e-300);
  base.upper_divergent = base.upper_window_growth > kWindowGrowthTol;
  base.lower_divergent = wide.c_a_hat < base.c_a_hat * (1.0 - kWindowGrowthTol);
  return base;
}

namespace {

double doubling_on_plan(const Space& space, const ProbePlan& plan) {
  double hat = 0.0;
  for (const Point& c : plan.centers) {
    for (double r : plan.radii) {
      const auto v2 = try_ball_volume(space, c, 2.0 * r);
      const auto v1 = try_ball_volume(space, c, r);
      if (v2 && v1 && *v1 > 0.0) hat = std::max(hat, *v2 / *v1);
    }
  }
  return hat;
}

}  // namespace

DoublingHat estimate_doubling(const Space& space, const ProbePlan& plan) {
  DoublingHat d;
  d.c_d_hat = doubling_on_plan(space, plan);
  const double wide = doubling_on_plan(space, plan.doubled());
  d.divergent = wide > d.c_d_hat * (1.0 + kWindowGrowthTol);
  if (d.divergent) d.c_d_hat = wide;
  d.dimension_hat = std::log2(d.c_d_hat);
  return d;
}

AvrEstimate estimate_avr(const Space& space, const GrowthFunction& growth,
                         const std::vector<Point>& centers,
                         const std::vector<double>& r_schedule) {
  if (r_schedule.size() < 6)
    throw std::invalid_argument("estimate_avr: schedule needs >= 6 radii");
  for (size_t i = 1; i < r_schedule.size(); ++i)
    if (!(r_schedule[i] > r_schedule[i - 1]))
      throw std::invalid_argument("estimate_avr: schedule must increase");
  if (centers.empty()) throw std::invalid_argument("estimate_avr: need a center");

  AvrEstimate a;
  std::vector<double> tail;  // ratios at the primary center
  for (double r : r_schedule)
    tail.push_back(space.ball_volume(centers[0], r) / growth.eval(r));
  a.value = tail.back();
  const size_t n = tail.size();
  a.tail_min = *std::min_element(tail.begin() + n / 2, tail.end());
  a.tail_max = *std::max_element(tail.begin() + n / 2, tail.end());
  a.converged = true;
  for (size_t i = n - 3; i + 1 < n; ++i)
    if (std::abs(tail[i + 1] - tail[i]) > 5e-3 * std::abs(tail.back())) a.converged = false;
  double lo = a.value, hi = a.value;
  for (size_t c = 1; c < centers.size(); ++c) {
    const double v =
        space.ball_volume(centers[c], r_schedule.back()) / growth.eval(r_schedule.back());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  a.cross_x0_spread = (hi - lo) / std::max(std::abs(a.value), 1e-300);
  a.std_err = std::abs(tail[n - 1] - tail[n - 2]);
  return a;
}

namespace {

double bg_on_plan(const Space& space, double s, const ProbePlan& plan) {
  double hat = 0.0;
  for (const Point& x : plan.centers) {
    for (const Point& y : plan.centers) {
      double d;
      try {
        d = space.distance(x, y);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (double R : plan.radii) {
        if (d > R) continue;
        const auto volR = try_ball_volume(space, x, R);
        if (!volR) continue;
        for (double r : plan.radii) {
          if (!(r < R)) continue;
          const auto volr = try_ball_volume(space, y, r);
          if (!volr || !(*volr > 0.0)) continue;
          hat = std::max(hat, *volR * std::pow(r, s) / (std::pow(R, s) * *volr));
        }
      }
    }
  }
  return hat;
}

}  // namespace

BishopGromovResult check_bishop_gromov(const Space& space, double s, const ProbePlan& plan) {
  BishopGromovResult r;
  r.k_hat = bg_on_plan(space, s, plan);
  const double wide = bg_on_plan(space, s, plan.doubled());
  r.stable = wide <= r.k_hat * (1.0 + kWindowGrowthTol);
  if (!r.stable) r.k_hat = wide;
  return r;
}

std::vector<double> construct_oscillating_radii(double m, double M, int N, int count,
                                                double r1) {
  if (!(0.0 < m && m < M)) throw std::invalid_argument("oscillating radii: need 0 < m < M");
  if (count < 1 || !(r1 > 0.0))
    throw std::invalid_argument("oscillating radii: count >= 1 and r1 > 0 required");
  std::vector<double> radii{r1};
  const double w = omega_n(N);
  for (int n = 2; n <= count; ++n) {
    double rn = std::pow(M * n, 1.0 / N) * radii.back() + 1.0;
    auto ratio_ok = [&](double r) {
      std::vector<double> trial = radii;
      trial.push_back(rn);
      const double ratio = annuli_ball_volume(trial, m, M, N, r) / std::pow(r, N);
      if (n % 2 == 0) return ratio >= (M - 1.0 / n) * w;
      return ratio <= (m + 1.0 / n) * w;
    };
    // the target also has to hold at r_n - 1 (the sequence is used at both)
    while (!(ratio_ok(rn) && (rn - 1.0 <= radii.back() || ratio_ok(rn - 1.0)))) rn *= 2.0;
    radii.push_back(rn);
  }
  return radii;
}

RegularityReport run_regularity(const Space& space, const GrowthFunction& growth) {
  RegularityReport rep;
  rep.plan = default_probe_plan(space);
  rep.ahlfors = estimate_ahlfors(space, growth, rep.plan);
  rep.doubling = estimate_doubling(space, rep.plan);
  std::vector<Point> centers{space.base_point()};
  for (size_t i = 0; i < rep.plan.centers.size() && centers.size() < 5; i += 3)
    centers.push_back(rep.plan.centers[i]);
  rep.avr_schedule =
      log_grid(space.kind() == SpaceKind::HyperbolicHalfPlane ? 1.0 : 10.0,
               space.kind() == SpaceKind::HyperbolicHalfPlane ? 40.0 : 1e6, 10);
  rep.avr = estimate_avr(space, growth, centers, rep.avr_schedule);
  double s = 1.0;
  if (growth.kind() == GrowthKind::Power) s = growth.power_exponent();
  rep.bishop_gromov = check_bishop_gromov(space, s, rep.plan);
  return rep;
}

std::vector<RegularityVerdict> check_regularity(const RegularityReport& report,
                                                const DeclaredProfile& profile) {
  constexpr double kTol = 0.01;
  std::vector<RegularityVerdict> out;
  auto compare = [&](const char* claim, const std::optional<double>& declared, double hat,
                     bool hat_meaningful) {
    if (!declared) return;
    RegularityVerdict v{claim, false, hat, *declared};
    v.pass = hat_meaningful && std::abs(hat - *declared) <= kTol * std::abs(*declared);
    out.push_back(v);
  };
  compare("C_a_hat", profile.C_a, report.ahlfors.c_a_hat, !report.ahlfors.lower_divergent);
  compare("C_A_hat", profile.C_A, report.ahlfors.c_A_hat, !report.ahlfors.upper_divergent);
  compare("C_d_hat", profile.C_d, report.doubling.c_d_hat, !report.doubling.divergent);
  compare("AVR_hat", profile.AVR, report.avr.value, report.avr.converged);
  if (!profile.C_A) {
    // a space declared without an upper constant must be flagged divergent
    out.push_back({"not_upper_ahlfors", report.ahlfors.upper_divergent,
                   report.ahlfors.c_A_hat, 0.0});
  }
  return out;
}

}  // namespace weaklab
