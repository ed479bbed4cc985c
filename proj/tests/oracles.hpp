#pragma once

// Test-side oracles, independent of the production integration paths: plain
// adaptive Simpson everywhere, brute-force rejection counting for volumes.

#include <cmath>
#include <functional>
#include <vector>

#include "weaklab/levelset.hpp"

namespace oracles {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  return (b - a) * (f(a) + 4.0 * f(c) + f(b)) / 6.0;
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double eps, double whole, int depth) {
  const double c = 0.5 * (a + b);
  const double left = simpson(f, a, c);
  const double right = simpson(f, c, b);
  const double diff = left + right - whole;
  if (std::abs(diff) < 15.0 * eps || depth <= 0) return left + right + diff / 15.0;
  return adaptive_simpson(f, a, c, 0.5 * eps, left, depth - 1) +
         adaptive_simpson(f, c, b, 0.5 * eps, right, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-12) {
  if (!(b > a)) return 0.0;
  return adaptive_simpson(f, a, b, eps * std::max(1.0, b - a), simpson(f, a, b), 60);
}

/// (nu x nu)(E_lambda) on a line kind by two nested Simpson integrations of the
/// raw weight; shares only the pointwise weight and the radius definition with
/// the production evaluator.
inline double strip_mass_quadrature(const weaklab::LevelSetQuery& q) {
  using weaklab::Step;
  const weaklab::LineWeight& w = q.space.line_weight();
  auto wt = [&](double x) { return w.eval(x); };
  const auto [dom_lo, dom_hi] = q.space.line_domain();

  // value partition rebuilt from the step list
  struct Piece {
    double lo, hi, value;
  };
  std::vector<Piece> pieces;
  double cursor = dom_lo;
  for (const Step& s : q.u.line_steps(q.space)) {
    if (s.lo > cursor) pieces.push_back({cursor, s.lo, 0.0});
    pieces.push_back({s.lo, s.hi, s.height});
    cursor = s.hi;
  }
  if (cursor < dom_hi) pieces.push_back({cursor, dom_hi, 0.0});

  double mass = 0.0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = 0; j < pieces.size(); ++j) {
      if (i == j) continue;
      const double delta = std::abs(pieces[i].value - pieces[j].value);
      if (delta <= 0.0) continue;
      const double r = q.growth.invert(std::pow(delta / q.lambda, q.p));
      const Piece& I = pieces[i];
      const Piece& J = pieces[j];
      double xlo = I.lo, xhi = I.hi;
      if (std::isfinite(J.lo)) xlo = std::max(xlo, J.lo - r);
      if (std::isfinite(J.hi)) xhi = std::min(xhi, J.hi + r);
      if (!(xhi > xlo) || !std::isfinite(xlo) || !std::isfinite(xhi)) continue;
      auto inner_measure = [&](double lo, double hi) {
        if (!(hi > lo)) return 0.0;
        // split at the weight's jump points: Simpson assumes smooth pieces
        std::vector<double> cc{lo, hi};
        for (double b : w.breaks())
          if (b > lo && b < hi) cc.push_back(b);
        std::sort(cc.begin(), cc.end());
        double m = 0.0;
        for (size_t k = 0; k + 1 < cc.size(); ++k)
          m += integrate(wt, cc[k], cc[k + 1], 1e-13);
        return m;
      };
      auto outer = [&](double x) {
        const double lo = std::max(J.lo, x - r), hi = std::min(J.hi, x + r);
        return wt(x) * inner_measure(lo, hi);
      };
      // split the outer integral at every kink candidate
      std::vector<double> cuts{xlo, xhi};
      std::vector<double> marks(w.breaks().begin(), w.breaks().end());
      if (std::isfinite(J.lo)) marks.push_back(J.lo);
      if (std::isfinite(J.hi)) marks.push_back(J.hi);
      for (double b : marks)
        for (double c : {b, b - r, b + r})
          if (c > xlo && c < xhi) cuts.push_back(c);
      std::sort(cuts.begin(), cuts.end());
      for (size_t k = 0; k + 1 < cuts.size(); ++k)
        mass += integrate(outer, cuts[k], cuts[k + 1], 1e-13);
    }
  }
  return mass;
}

/// Heisenberg unit gauge ball volume by rejection counting over the bounding
/// box [-1,1]^2 x [-1/4, 1/4] (box volume 2).
inline double heisenberg_unit_volume_mc(uint64_t n, uint64_t seed) {
  weaklab::RngStream rng(seed, 900);
  uint64_t hits = 0;
  for (uint64_t i = 0; i < n; ++i) {
    const double x = rng.uniform(-1.0, 1.0);
    const double y = rng.uniform(-1.0, 1.0);
    const double t = rng.uniform(-0.25, 0.25);
    const double rho2 = x * x + y * y;
    if (rho2 * rho2 + 16.0 * t * t <= 1.0) ++hits;
  }
  return 2.0 * static_cast<double>(hits) / static_cast<double>(n);
}

/// chi-square statistic for observed counts against equal expectations.
inline double chi_square_equal(const std::vector<uint64_t>& counts, double total) {
  const double expect = total / counts.size();
  double stat = 0.0;
  for (uint64_t c : counts) {
    const double d = static_cast<double>(c) - expect;
    stat += d * d / expect;
  }
  return stat;
}

// chi2 inverse CDF at 0.999 for 9 degrees of freedom
constexpr double kChi2Crit9_999 = 27.877164;

}  // namespace oracles
