#include "weaklab/space.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace weaklab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double acosh1p(double s) { return std::log1p(s + std::sqrt(s * (s + 2.0))); }
}  // namespace

Point heis_mul(const Point& a, const Point& b) {
  return Point::p3(a.x() + b.x(), a.y() + b.y(),
                   a.t() + b.t() + 0.5 * (a.x() * b.y() - a.y() * b.x()));
}

Point heis_inv(const Point& a) { return Point::p3(-a.x(), -a.y(), -a.t()); }

double heis_gauge(const Point& g) {
  const double rho2 = g.x() * g.x() + g.y() * g.y();
  return std::pow(rho2 * rho2 + 16.0 * g.t() * g.t(), 0.25);
}

double lq_unit_ball_volume(int n, double q) {
  if (std::isinf(q)) return std::pow(2.0, n);
  if (q == 2.0) {
    if (n == 1) return 2.0;
    if (n == 2) return kPi;
    if (n == 3) return 4.0 * kPi / 3.0;
  }
  if (q == 1.0) {
    if (n == 1) return 2.0;
    if (n == 2) return 2.0;
    if (n == 3) return 4.0 / 3.0;
  }
  return std::exp(n * (std::log(2.0) + std::lgamma(1.0 + 1.0 / q)) -
                  std::lgamma(1.0 + n / q));
}

Space Space::euclidean_lp(int dim, double q) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("euclidean_lp: dim must be 1..3");
  if (!(q >= 1.0)) throw std::invalid_argument("euclidean_lp: q must be >= 1 (or inf)");
  Space s;
  s.kind_ = SpaceKind::EuclideanLp;
  s.dim_ = dim;
  s.q_ = q;
  s.base_ = dim == 1 ? Point::p1(0) : dim == 2 ? Point::p2(0, 0) : Point::p3(0, 0, 0);
  if (dim == 1) s.weight_ = LineWeight::constant(1.0);
  const double c = lq_unit_ball_volume(dim, q);
  s.profile_.C_a = c;
  s.profile_.C_A = c;
  s.profile_.AVR = c;
  s.profile_.C_d = std::pow(2.0, dim);
  return s;
}

Space Space::weighted_line() {
  Space s;
  s.kind_ = SpaceKind::WeightedLine;
  s.dim_ = 1;
  s.weight_ = LineWeight::one_plus_abs();
  s.base_ = Point::p1(0);
  // lower Ahlfors (s = 2) with C_a = 1; no finite upper constant exists
  s.profile_.C_a = 1.0;
  s.profile_.C_d = 4.0;
  s.profile_.AVR = 1.0;
  return s;
}

Space Space::heisenberg() {
  Space s;
  s.kind_ = SpaceKind::Heisenberg;
  s.dim_ = 3;
  s.base_ = Point::p3(0, 0, 0);
  const double c = kPi * kPi / 8.0;
  s.profile_.C_a = c;
  s.profile_.C_A = c;
  s.profile_.AVR = c;
  s.profile_.C_d = 16.0;
  return s;
}

Space Space::hyperbolic_half_plane() {
  Space s;
  s.kind_ = SpaceKind::HyperbolicHalfPlane;
  s.dim_ = 2;
  s.base_ = Point::p2(0, 1);
  // f-profile with f = cosh - 1: area(B(x,r)) = 2 pi f(r) exactly
  const double c = 2.0 * kPi;
  s.profile_.C_a = c;
  s.profile_.C_A = c;
  s.profile_.AVR = c;
  return s;
}

Space Space::oscillating_line(double m, double M, std::vector<double> radii) {
  if (!(0.0 < m && m < M)) throw std::invalid_argument("oscillating_line: need 0 < m < M");
  Space s;
  s.kind_ = SpaceKind::OscillatingLine;
  s.dim_ = 1;
  s.m_ = m;
  s.M_ = M;
  s.radii_ = radii;
  s.weight_ = LineWeight::alternating_annuli(radii, m, M);
  s.base_ = Point::p1(0);
  s.profile_.C_a = 2.0 * m;
  s.profile_.C_A = 2.0 * M;
  s.profile_.C_d = 2.0 * M / m;
  return s;
}

Space Space::finite_interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("finite_interval: need a < b");
  Space s;
  s.kind_ = SpaceKind::FiniteInterval;
  s.dim_ = 1;
  s.a_ = a;
  s.b_ = b;
  s.weight_ = LineWeight::window(a, b);
  s.base_ = Point::p1(0.5 * (a + b));
  s.profile_.C_A = 2.0;
  s.profile_.total_mass_finite = true;
  return s;
}

Space Space::with_base_point(const Point& p) const {
  Space s = *this;
  s.check_point(p);
  s.base_ = p;
  return s;
}

bool Space::is_line_kind() const {
  switch (kind_) {
    case SpaceKind::WeightedLine:
    case SpaceKind::OscillatingLine:
    case SpaceKind::FiniteInterval:
      return true;
    case SpaceKind::EuclideanLp:
      return dim_ == 1;
    default:
      return false;
  }
}

const LineWeight& Space::line_weight() const {
  if (!is_line_kind()) throw std::invalid_argument("line_weight: not a line kind");
  return weight_;
}

std::pair<double, double> Space::line_domain() const {
  if (kind_ == SpaceKind::FiniteInterval) return {a_, b_};
  return {-kInf, kInf};
}

void Space::check_point(const Point& p) const {
  if (p.dim != dim_)
    throw std::invalid_argument("point dimension does not match space chart dimension");
  if (kind_ == SpaceKind::HyperbolicHalfPlane && !(p.y() > 0.0))
    throw std::invalid_argument("half-plane point must have y > 0");
  if (kind_ == SpaceKind::FiniteInterval && (p.x() < a_ || p.x() > b_))
    throw std::invalid_argument("point outside the interval");
}

double Space::distance(const Point& a, const Point& b) const {
  check_point(a);
  check_point(b);
  switch (kind_) {
    case SpaceKind::EuclideanLp: {
      if (std::isinf(q_)) {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
        return m;
      }
      if (q_ == 2.0) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
          const double d = a.c[i] - b.c[i];
          s += d * d;
        }
        return std::sqrt(s);
      }
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += std::pow(std::abs(a.c[i] - b.c[i]), q_);
      return std::pow(s, 1.0 / q_);
    }
    case SpaceKind::WeightedLine:
    case SpaceKind::OscillatingLine:
    case SpaceKind::FiniteInterval:
      return std::abs(a.x() - b.x());
    case SpaceKind::Heisenberg:
      return heis_gauge(heis_mul(heis_inv(a), b));
    case SpaceKind::HyperbolicHalfPlane: {
      const double dx = a.x() - b.x(), dy = a.y() - b.y();
      return acosh1p((dx * dx + dy * dy) / (2.0 * a.y() * b.y()));
    }
  }
  return 0.0;
}

double Space::unit_ball_volume() const {
  switch (kind_) {
    case SpaceKind::EuclideanLp:
      return lq_unit_ball_volume(dim_, q_);
    case SpaceKind::Heisenberg:
      return kPi * kPi / 8.0;
    case SpaceKind::HyperbolicHalfPlane:
      return 2.0 * kPi * (std::cosh(1.0) - 1.0);
    default:
      throw std::invalid_argument("unit_ball_volume: not homogeneous");
  }
}

double Space::ball_volume(const Point& center, double r) const {
  check_point(center);
  if (!(r > 0.0)) throw std::invalid_argument("ball_volume: r must be > 0");
  switch (kind_) {
    case SpaceKind::EuclideanLp:
      if (dim_ == 1) return 2.0 * r;
      return lq_unit_ball_volume(dim_, q_) * std::pow(r, dim_);
    case SpaceKind::WeightedLine:
    case SpaceKind::OscillatingLine:
    case SpaceKind::FiniteInterval:
      return weight_.integrate(center.x() - r, center.x() + r);
    case SpaceKind::Heisenberg:
      return (kPi * kPi / 8.0) * (r * r) * (r * r);
    case SpaceKind::HyperbolicHalfPlane:
      return 2.0 * kPi * (std::cosh(r) - 1.0);
  }
  return 0.0;
}

Point Space::sample_ball(const Point& center, double r, RngStream& rng) const {
  check_point(center);
  if (!(r > 0.0)) throw std::invalid_argument("sample_ball: r must be > 0");
  switch (kind_) {
    case SpaceKind::EuclideanLp: {
      if (dim_ == 1) return Point::p1(center.x() + r * rng.uniform(-1.0, 1.0));
      if (std::isinf(q_)) {
        Point p = center;
        for (int i = 0; i < dim_; ++i) p.c[i] = center.c[i] + r * rng.uniform(-1.0, 1.0);
        return p;
      }
      if (q_ == 2.0 && dim_ == 2) {
        const double rho = r * std::sqrt(rng.uniform());
        const double th = rng.uniform(0.0, 2.0 * kPi);
        return Point::p2(center.x() + rho * std::cos(th), center.y() + rho * std::sin(th));
      }
      if (q_ == 2.0 && dim_ == 3) {
        const double rho = r * std::cbrt(rng.uniform());
        const double z = rng.uniform(-1.0, 1.0);
        const double th = rng.uniform(0.0, 2.0 * kPi);
        const double s = std::sqrt(1.0 - z * z);
        return Point::p3(center.x() + rho * s * std::cos(th),
                         center.y() + rho * s * std::sin(th), center.t() + rho * z);
      }
      // general q: generalized-Gaussian construction (exact, no rejection)
      Point p = center;
      double sum = 0.0;
      double g[3];
      for (int i = 0; i < dim_; ++i) {
        const double gam = rng.gamma(1.0 / q_);
        const double mag = std::pow(gam, 1.0 / q_);
        g[i] = (rng.uniform() < 0.5) ? -mag : mag;
        sum += gam;
      }
      const double denom = std::pow(sum + rng.exponential(), 1.0 / q_);
      for (int i = 0; i < dim_; ++i) p.c[i] = center.c[i] + r * g[i] / denom;
      return p;
    }
    case SpaceKind::WeightedLine:
    case SpaceKind::OscillatingLine:
    case SpaceKind::FiniteInterval: {
      auto [plo, phi] = weight_.positive_domain();
      const double lo = std::max(center.x() - r, plo);
      const double hi = std::min(center.x() + r, phi);
      const double total = weight_.integrate(lo, hi);
      if (!(total > 0.0)) throw std::invalid_argument("sample_ball: ball has zero mass");
      return Point::p1(weight_.invert_mass(lo, rng.open01() * total));
    }
    case SpaceKind::Heisenberg: {
      // uniform in the unit gauge ball by rejection from [-1,1]^2 x [-1/4,1/4]
      // (acceptance (pi^2/8)/2 ~ 0.617), then dilate by r and left-translate.
      for (;;) {
        const Point w = Point::p3(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                  rng.uniform(-0.25, 0.25));
        if (heis_gauge(w) <= 1.0) {
          const Point wr = Point::p3(r * w.x(), r * w.y(), r * r * w.t());
          return heis_mul(center, wr);
        }
      }
    }
    case SpaceKind::HyperbolicHalfPlane: {
      // geodesic polar around i = (0,1): radius density sinh t, angle uniform;
      // then the isometry z -> cy z + cx moves i to the center.
      const double t = acosh1p(rng.uniform() * (std::cosh(r) - 1.0));
      const double th = rng.uniform(0.0, 2.0 * kPi);
      const double one_minus_rho = 2.0 / (std::exp(t) + 1.0);
      const double rho = 1.0 - one_minus_rho;
      const double ax = 1.0 + rho * std::cos(th), ay = rho * std::sin(th);
      const double bx = one_minus_rho + rho * (1.0 - std::cos(th));
      const double by = -rho * std::sin(th);
      const double den = bx * bx + by * by;
      const double qx = (ax * bx + ay * by) / den;
      const double qy = (ay * bx - ax * by) / den;
      // z = i * (a / b) = (-qy, qx); qx = (1 - rho^2)/|1-w|^2 > 0
      return Point::p2(center.y() * (-qy) + center.x(), center.y() * qx);
    }
  }
  return center;
}

}  // namespace weaklab
