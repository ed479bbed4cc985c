#include "weaklab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weaklab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// acosh(1 + s) without cancellation for small s.
double acosh1p(double s) { return std::log1p(s + std::sqrt(s * (s + 2.0))); }
}  // namespace

GrowthFunction GrowthFunction::power(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("GrowthFunction::power: s must be > 0");
  GrowthFunction f;
  f.kind_ = GrowthKind::Power;
  f.s_ = s;
  return f;
}

GrowthFunction GrowthFunction::cosh_minus_one() {
  GrowthFunction f;
  f.kind_ = GrowthKind::CoshMinusOne;
  return f;
}

GrowthFunction GrowthFunction::monotone_table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 3) throw std::invalid_argument("monotone_table: need >= 3 points");
  std::sort(points.begin(), points.end());
  GrowthFunction f;
  f.kind_ = GrowthKind::MonotoneTable;
  const size_t n = points.size();
  f.xs_.resize(n);
  f.ys_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    f.xs_[i] = points[i].first;
    f.ys_[i] = points[i].second;
    if (i > 0 && !(f.xs_[i] > f.xs_[i - 1] && f.ys_[i] > f.ys_[i - 1]))
      throw std::invalid_argument("monotone_table: nodes must be strictly increasing");
  }
  if (f.xs_[0] != 0.0 || f.ys_[0] != 0.0)
    throw std::invalid_argument("monotone_table: first node must be (0, 0)");
  // Fritsch-Carlson tangents: average secants, then limit to keep the
  // interpolant monotone (no overshoot).
  std::vector<double> d(n - 1);
  for (size_t i = 0; i + 1 < n; ++i)
    d[i] = (f.ys_[i + 1] - f.ys_[i]) / (f.xs_[i + 1] - f.xs_[i]);
  f.ms_.resize(n);
  f.ms_[0] = d[0];
  f.ms_[n - 1] = d[n - 2];
  for (size_t i = 1; i + 1 < n; ++i) f.ms_[i] = 0.5 * (d[i - 1] + d[i]);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double a = f.ms_[i] / d[i], b = f.ms_[i + 1] / d[i];
    const double r2 = a * a + b * b;
    if (r2 > 9.0) {
      const double t = 3.0 / std::sqrt(r2);
      f.ms_[i] = t * a * d[i];
      f.ms_[i + 1] = t * b * d[i];
    }
  }
  return f;
}

double GrowthFunction::domain_max() const {
  return kind_ == GrowthKind::MonotoneTable ? xs_.back() : kInf;
}

double GrowthFunction::eval(double r) const {
  if (!(r >= 0.0)) throw std::invalid_argument("growth eval: r must be >= 0");
  switch (kind_) {
    case GrowthKind::Power:
      return std::pow(r, s_);
    case GrowthKind::CoshMinusOne: {
      const double s = std::sinh(0.5 * r);  // cosh r - 1 without cancellation
      return 2.0 * s * s;
    }
    case GrowthKind::MonotoneTable: {
      if (r > xs_.back())
        throw std::invalid_argument("growth eval: r beyond table range");
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), r);
      size_t i = (it == xs_.begin()) ? 0 : static_cast<size_t>(it - xs_.begin()) - 1;
      if (i + 1 >= xs_.size()) i = xs_.size() - 2;
      const double h = xs_[i + 1] - xs_[i];
      const double t = (r - xs_[i]) / h;
      const double t2 = t * t, t3 = t2 * t;
      return (2 * t3 - 3 * t2 + 1) * ys_[i] + (t3 - 2 * t2 + t) * h * ms_[i] +
             (-2 * t3 + 3 * t2) * ys_[i + 1] + (t3 - t2) * h * ms_[i + 1];
    }
  }
  return 0.0;
}

double GrowthFunction::invert(double y) const {
  if (!(y >= 0.0)) throw std::invalid_argument("growth invert: y must be >= 0");
  if (y == 0.0) return 0.0;
  switch (kind_) {
    case GrowthKind::Power:
      return std::pow(y, 1.0 / s_);
    case GrowthKind::CoshMinusOne:
      return acosh1p(y);
    case GrowthKind::MonotoneTable: {
      if (y > ys_.back())
        throw std::invalid_argument("growth invert: y beyond table range");
      double a = 0.0, b = xs_.back();
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = eval(mid);
        if (std::abs(fm - y) <= 1e-12 * (1.0 + y)) return mid;
        if (fm < y)
          a = mid;
        else
          b = mid;
      }
      return 0.5 * (a + b);
    }
  }
  return 0.0;
}

GrowthCheck GrowthFunction::check_validity() const {
  GrowthCheck c;
  // probe grid: table nodes, or a log grid capped so values stay finite
  std::vector<double> probe;
  probe.push_back(0.0);
  if (kind_ == GrowthKind::MonotoneTable) {
    double lo = xs_[1] * 1e-3, hi = xs_.back();
    for (int i = 0; i < 1000; ++i)
      probe.push_back(lo * std::pow(hi / lo, i / 999.0));
  } else {
    double hi = 1e6;
    if (kind_ == GrowthKind::Power) hi = std::min(hi, std::pow(1e300, 1.0 / s_));
    if (kind_ == GrowthKind::CoshMinusOne) hi = 600.0;
    const double lo = 1e-6;
    for (int i = 0; i < 1000; ++i)
      probe.push_back(lo * std::pow(hi / lo, i / 999.0));
  }
  std::vector<double> fv(probe.size());
  for (size_t i = 0; i < probe.size(); ++i) fv[i] = eval(probe[i]);
  if (std::abs(fv[0]) > 1e-300) {
    c.zero_at_zero = false;
    c.detail = "f(0) != 0";
  }
  for (size_t i = 0; i + 1 < probe.size() && c.increasing; ++i) {
    if (!(fv[i + 1] > fv[i])) {
      c.increasing = false;
      if (c.detail.empty()) c.detail = "not strictly increasing";
    }
  }
  double prev_slope = -kInf;
  for (size_t i = 0; i + 1 < probe.size() && c.convex; ++i) {
    const double slope = (fv[i + 1] - fv[i]) / (probe[i + 1] - probe[i]);
    const double tol = 1e-10 * std::max({1.0, std::abs(slope), std::abs(prev_slope)});
    if (slope < prev_slope - tol) {
      c.convex = false;
      if (c.detail.empty()) c.detail = "concavity detected";
    }
    prev_slope = slope;
  }
  c.valid = c.zero_at_zero && c.increasing && c.convex;
  return c;
}

}  // namespace weaklab
