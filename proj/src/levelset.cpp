#include "weaklab/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "weaklab/parallel.hpp"
#include "weaklab/quadrature.hpp"

namespace weaklab {

namespace {

constexpr uint64_t kChunk = 1ull << 14;

// Partition of the line chart into maximal intervals of constant u, including
// the zero-valued complement pieces.
struct ValuePiece {
  double lo, hi, value;
};

std::vector<ValuePiece> value_partition(const Space& space, const TestFunction& u) {
  auto [dlo, dhi] = space.line_domain();
  std::vector<ValuePiece> pieces;
  double cursor = dlo;
  for (const Step& s : u.line_steps(space)) {
    const double lo = std::max(s.lo, dlo), hi = std::min(s.hi, dhi);
    if (hi <= lo) continue;
    if (lo > cursor) pieces.push_back({cursor, lo, 0.0});
    pieces.push_back({lo, hi, s.height});
    cursor = hi;
  }
  if (cursor < dhi) pieces.push_back({cursor, dhi, 0.0});
  return pieces;
}

// Exact integral over x in I of w(x) * nu({y in J : |x-y| <= r, and, when
// half_x0 is set, |y - x0| > |x - x0|}). The integrand is piecewise
// polynomial in x; gaps between the critical points below are integrated
// with 5-point Gauss-Legendre, which is exact for the built-in weights.
double strip_mass(const LineWeight& w, const ValuePiece& I, const ValuePiece& J, double r,
                  const double* half_x0) {
  double xlo = I.lo, xhi = I.hi;
  if (std::isfinite(J.lo) || std::isfinite(J.hi)) {
    if (std::isfinite(J.lo)) xlo = std::max(xlo, J.lo - r);
    if (std::isfinite(J.hi)) xhi = std::min(xhi, J.hi + r);
  }
  if (!(xhi > xlo)) return 0.0;
  if (!std::isfinite(xlo) || !std::isfinite(xhi)) return 0.0;  // both-zero pairs are skipped

  std::vector<double> cuts;
  cuts.push_back(xlo);
  cuts.push_back(xhi);
  auto add = [&](double c) {
    if (c > xlo && c < xhi) cuts.push_back(c);
  };
  std::vector<double> marks(w.breaks().begin(), w.breaks().end());
  if (std::isfinite(J.lo)) marks.push_back(J.lo);
  if (std::isfinite(J.hi)) marks.push_back(J.hi);
  for (double b : marks) {
    add(b);
    add(b - r);
    add(b + r);
    if (half_x0) add(2.0 * *half_x0 - b);
  }
  if (half_x0) {
    add(*half_x0);
    add(*half_x0 - 0.5 * r);
    add(*half_x0 + 0.5 * r);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto inner = [&](double x) {
    const double lo = std::max(J.lo, x - r), hi = std::min(J.hi, x + r);
    if (!(hi > lo)) return 0.0;
    double m = w.integrate(lo, hi);
    if (half_x0) {
      const double d = std::abs(x - *half_x0);
      const double slo = std::max(lo, *half_x0 - d), shi = std::min(hi, *half_x0 + d);
      if (shi > slo) m -= w.integrate(slo, shi);
    }
    return w.eval(x) * m;
  };

  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    total += gauss_legendre5(inner, cuts[i], cuts[i + 1]);
  return total;
}

double pair_radius(const LevelSetQuery& q, double delta) {
  // |u(x)-u(y)| = delta enters E_lambda iff d <= f^{-1}((delta/lambda)^p)
  const double r = q.growth.invert(std::pow(delta / q.lambda, q.p));
  if (!std::isfinite(r))
    throw std::invalid_argument("level-set radius overflows; lambda too small for this p");
  return r;
}

LevelSetEstimate exact_line_mass(const LevelSetQuery& q, bool half) {
  validate_query(q);
  if (!exact_1d_supported(q))
    throw std::invalid_argument("exact_mass_1d: space kind or test function unsupported");
  const LineWeight& w = q.space.line_weight();
  const auto pieces = value_partition(q.space, q.u);
  const double x0 = q.space.base_point().x();
  double mass = 0.0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      const double delta = std::abs(pieces[i].value - pieces[j].value);
      if (delta <= 0.0) continue;
      const double r = pair_radius(q, delta);
      if (!(r > 0.0)) continue;
      if (half) {
        mass += strip_mass(w, pieces[i], pieces[j], r, &x0);
        mass += strip_mass(w, pieces[j], pieces[i], r, &x0);
      } else {
        mass += 2.0 * strip_mass(w, pieces[i], pieces[j], r, nullptr);
      }
    }
  }
  return {q.lambda, std::pow(q.lambda, q.p) * mass, 0.0, mass, EstimateMethod::Exact1D, 0};
}

// --- Monte Carlo ------------------------------------------------------------

struct StratumAcc {
  double sum = 0.0, sumsq = 0.0;
};

// stream id: op tag | stratum | chunk index
uint64_t stream_id(uint64_t op, uint64_t stratum, uint64_t chunk) {
  return (op << 56) | (stratum << 48) | chunk;
}

LevelSetEstimate mc_estimate(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                             int workers, bool half) {
  validate_query(q);
  if (budget < 10000) throw std::invalid_argument("mc_mass: budget must be >= 10^4");
  if (!q.u.support_bounded())
    throw std::invalid_argument(
        "mc_mass: unbounded support; apply truncate() and estimate the pieces");
  const LevelSetEstimate zero{q.lambda, 0.0, 0.0, 0.0, EstimateMethod::MonteCarlo, 0};
  if (q.u.sup_norm() == 0.0) return zero;

  const double r_max = q.growth.invert(std::pow(2.0 * q.u.sup_norm() / q.lambda, q.p));
  if (!(r_max > 0.0)) return zero;  // E_lambda is contained in the null diagonal
  if (!std::isfinite(r_max))
    throw std::invalid_argument("level-set radius overflows; lambda too small for this p");

  const SupportRegionSampler sampler(q.space, q.u, q.p);
  const SupportBall D = sampler.region();
  const uint64_t op = half ? 1 : 0;

  const uint64_t n_a = budget / 2, n_b = budget - n_a;
  const uint64_t chunks_a = (n_a + kChunk - 1) / kChunk;
  const uint64_t chunks_b = (n_b + kChunk - 1) / kChunk;
  std::vector<StratumAcc> acc_a(chunks_a), acc_b(chunks_b);

  for_each_chunk(chunks_a + chunks_b, workers, [&](uint64_t ci) {
    const bool in_a = ci < chunks_a;
    const uint64_t local = in_a ? ci : ci - chunks_a;
    const uint64_t n_total = in_a ? n_a : n_b;
    const uint64_t begin = local * kChunk;
    const uint64_t end = std::min(begin + kChunk, n_total);
    RngStream rng(seed, stream_id(op, in_a ? 0 : 1, local));
    StratumAcc acc;
    if (in_a) {
      // both points from the support-region mixture
      for (uint64_t k = begin; k < end; ++k) {
        const WeightedSample sx = sampler.draw(rng);
        const WeightedSample sy = sampler.draw(rng);
        if (!in_level_set(q, sx.point, sy.point)) continue;
        if (half) {
          const Point& x0 = q.space.base_point();
          if (!(q.space.distance(x0, sy.point) > q.space.distance(x0, sx.point))) continue;
        }
        const double wgt = 1.0 / (sx.density_value * sy.density_value);
        acc.sum += wgt;
        acc.sumsq += wgt * wgt;
      }
    } else {
      // x from the support region, y nu-uniform in B(x, r_max); pairs with
      // y inside D are already covered by stratum A and are excluded here.
      for (uint64_t k = begin; k < end; ++k) {
        const WeightedSample sx = sampler.draw(rng);
        const Point y = q.space.sample_ball(sx.point, r_max, rng);
        if (q.space.distance(D.center, y) <= D.radius) continue;
        if (!in_level_set(q, sx.point, y)) continue;
        const double wgt = q.space.ball_volume(sx.point, r_max) / sx.density_value;
        acc.sum += wgt;
        acc.sumsq += wgt * wgt;
      }
    }
    (in_a ? acc_a : acc_b)[local] = acc;
  });

  // fixed-order reduction: results do not depend on the worker count
  auto reduce = [](const std::vector<StratumAcc>& parts, uint64_t n) {
    double s = 0.0, s2 = 0.0;
    for (const StratumAcc& a : parts) {
      s += a.sum;
      s2 += a.sumsq;
    }
    const double mean = s / static_cast<double>(n);
    double var = 0.0;
    if (n > 1) {
      var = (s2 - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
      var = std::max(var, 0.0) / static_cast<double>(n);
    }
    return std::pair<double, double>{mean, var};
  };
  const auto [mean_a, var_a] = reduce(acc_a, n_a);
  const auto [mean_b, var_b] = reduce(acc_b, n_b);

  // full mass counts the mixed stratum twice (x and y exchange); the half set
  // counts it once: (nu x nu)(H ∩ (D^c x D)) + (nu x nu)(H ∩ (D x D^c)) equals
  // (nu x nu)(E ∩ (D x D^c)) under the swap x <-> y.
  const double factor = half ? 1.0 : 2.0;
  const double mass = mean_a + factor * mean_b;
  const double se_mass = std::sqrt(var_a + factor * factor * var_b);
  const double lp = std::pow(q.lambda, q.p);
  return {q.lambda, lp * mass, lp * se_mass, mass, EstimateMethod::MonteCarlo, budget};
}

}  // namespace

std::string method_name(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::Exact1D:
      return "exact_1d";
    case EstimateMethod::ExactIndicator:
      return "exact_indicator";
    case EstimateMethod::MonteCarlo:
      return "monte_carlo";
  }
  return "?";
}

void validate_query(const LevelSetQuery& q) {
  if (!(q.lambda > 0.0)) throw std::invalid_argument("query: lambda must be > 0");
  if (!(q.p >= 1.0)) throw std::invalid_argument("query: p must be >= 1");
  const GrowthCheck c = q.growth.check_validity();
  if (!c.valid)
    throw std::invalid_argument("query: growth function invalid (" + c.detail + ")");
}

bool in_level_set(const LevelSetQuery& q, const Point& x, const Point& y) {
  if (x == y) return false;
  const double du = std::abs(q.u.eval(q.space, x) - q.u.eval(q.space, y));
  if (du <= 0.0) return false;
  const double fd = q.growth.eval(q.space.distance(x, y));
  return du >= q.lambda * std::pow(fd, 1.0 / q.p);
}

bool exact_1d_supported(const LevelSetQuery& q) {
  return q.space.is_line_kind() && q.u.piecewise_on_line(q.space);
}

bool exact_indicator_supported(const LevelSetQuery& q) {
  const TestFnKind k = q.u.fn_kind();
  if (k == TestFnKind::Zero) return true;
  if (k != TestFnKind::IndicatorBall) return false;
  if (q.space.is_line_kind()) return true;
  if (q.space.kind() == SpaceKind::EuclideanLp && q.space.dim() == 2 &&
      (q.space.lq() == 2.0 || std::isinf(q.space.lq())))
    return true;
  return false;
}

LevelSetEstimate exact_mass_1d(const LevelSetQuery& q) { return exact_line_mass(q, false); }

LevelSetEstimate exact_half_mass_1d(const LevelSetQuery& q) {
  return exact_line_mass(q, true);
}

LevelSetEstimate exact_mass_indicator(const LevelSetQuery& q) {
  validate_query(q);
  if (!exact_indicator_supported(q))
    throw std::invalid_argument(
        "exact_mass_indicator: needs an indicator-ball u and closed-form intersection "
        "volumes (line kinds or the Euclidean plane with q in {2, inf})");
  if (q.u.fn_kind() == TestFnKind::Zero)
    return {q.lambda, 0.0, 0.0, 0.0, EstimateMethod::ExactIndicator, 0};
  const SupportBall S = q.u.indicator_ball_geometry();
  const double h = std::abs(q.u.indicator_height());
  const double r = q.growth.invert(std::pow(h / q.lambda, q.p));
  if (!std::isfinite(r))
    throw std::invalid_argument("level-set radius overflows; lambda too small for this p");
  double mass = 0.0;
  if (q.space.is_line_kind()) {
    const LineWeight& w = q.space.line_weight();
    const double slo = S.center.x() - S.radius, shi = S.center.x() + S.radius;
    auto f = [&](double x) {
      const double full = w.integrate(x - r, x + r);
      const double in_s = w.integrate(std::max(x - r, slo), std::min(x + r, shi));
      return w.eval(x) * (full - in_s);
    };
    std::vector<double> cuts{slo, shi};
    for (double b : w.breaks()) {
      for (double c : {b, b - r, b + r})
        if (c > slo && c < shi) cuts.push_back(c);
    }
    for (double c : {slo + r, shi - r})
      if (c > slo && c < shi) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      mass += 2.0 * integrate_adaptive(f, cuts[i], cuts[i + 1], 1e-9);
  } else if (q.space.lq() == 2.0) {
    // radial reduction over the disk S; lens(rho) is the two-disk overlap
    const double a = S.radius;
    auto lens = [&](double rho) {
      if (rho >= r + a) return 0.0;
      const double rmin = std::min(r, a);
      if (rho <= std::abs(r - a)) return std::numbers::pi * rmin * rmin;
      const double c1 =
          std::acos(std::clamp((rho * rho + r * r - a * a) / (2 * rho * r), -1.0, 1.0));
      const double c2 =
          std::acos(std::clamp((rho * rho + a * a - r * r) / (2 * rho * a), -1.0, 1.0));
      const double k =
          (-rho + r + a) * (rho + r - a) * (rho - r + a) * (rho + r + a);
      return r * r * c1 + a * a * c2 - 0.5 * std::sqrt(std::max(k, 0.0));
    };
    auto f = [&](double rho) {
      return 2.0 * std::numbers::pi * rho * (std::numbers::pi * r * r - lens(rho));
    };
    std::vector<double> cuts{0.0, a};
    for (double c : {std::abs(r - a), r + a})
      if (c > 0.0 && c < a) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      mass += 2.0 * integrate_adaptive(f, cuts[i], cuts[i + 1], 1e-9);
  } else {
    // q = inf: squares; the overlap factorizes per axis into
    // int_{-a}^{a} len([x-r,x+r] ∩ [-a,a]) dx, a closed form
    const double a = S.radius;
    const double axis = (r >= 2.0 * a) ? 4.0 * a * a : 4.0 * a * r - r * r;
    mass = 2.0 * ((4.0 * r * r) * (4.0 * a * a) - axis * axis);
  }
  const double lp = std::pow(q.lambda, q.p);
  return {q.lambda, lp * mass, 0.0, mass, EstimateMethod::ExactIndicator, 0};
}

LevelSetEstimate mc_mass(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                         int workers) {
  return mc_estimate(q, budget, seed, workers, false);
}

LevelSetEstimate mc_half_mass(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                              int workers) {
  return mc_estimate(q, budget, seed, workers, true);
}

LevelSetEstimate half_set_mass(const LevelSetQuery& q, uint64_t budget, uint64_t seed,
                               int workers) {
  if (exact_1d_supported(q)) return exact_half_mass_1d(q);
  return mc_half_mass(q, budget, seed, workers);
}

}  // namespace weaklab
