#include "weaklab/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weaklab {

namespace {

// Area of the intersection of two disks with radii r1, r2 and center
// distance d (Euclidean plane, q = 2).
double lens_area(double d, double r1, double r2) {
  if (d >= r1 + r2) return 0.0;
  const double rmin = std::min(r1, r2);
  if (d <= std::abs(r1 - r2)) return std::numbers::pi * rmin * rmin;
  const double a1 = std::acos(std::clamp((d * d + r1 * r1 - r2 * r2) / (2 * d * r1), -1.0, 1.0));
  const double a2 = std::acos(std::clamp((d * d + r2 * r2 - r1 * r1) / (2 * d * r2), -1.0, 1.0));
  const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
  return r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * std::sqrt(std::max(k, 0.0));
}

// Area of the intersection of two axis-aligned squares (q = inf balls).
double square_overlap(const Point& c1, double r1, const Point& c2, double r2) {
  double area = 1.0;
  for (int i = 0; i < 2; ++i) {
    const double lo = std::max(c1.c[i] - r1, c2.c[i] - r2);
    const double hi = std::min(c1.c[i] + r1, c2.c[i] + r2);
    if (hi <= lo) return 0.0;
    area *= hi - lo;
  }
  return area;
}

std::vector<Step> sort_steps(std::vector<Step> steps) {
  for (const Step& s : steps)
    if (!(s.lo < s.hi)) throw std::invalid_argument("step_sum: empty or inverted interval");
  std::sort(steps.begin(), steps.end(),
            [](const Step& a, const Step& b) { return a.lo < b.lo; });
  for (size_t i = 1; i < steps.size(); ++i)
    if (steps[i].lo < steps[i - 1].hi - 0.0)
      throw std::invalid_argument("step_sum: intervals must be disjoint");
  return steps;
}

}  // namespace

TestFunction TestFunction::zero() {
  TestFunction u;
  u.kind_ = TestFnKind::Zero;
  return u;
}

TestFunction TestFunction::zero_with_support(SupportBall declared) {
  TestFunction u = zero();
  u.support_ = declared;
  return u;
}

TestFunction TestFunction::indicator_ball(Point center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("indicator_ball: radius must be > 0");
  TestFunction u;
  u.kind_ = TestFnKind::IndicatorBall;
  u.height_ = 1.0;
  u.ball_ = {center, radius};
  u.support_ = u.ball_;
  u.sup_norm_ = 1.0;
  return u;
}

TestFunction TestFunction::shifted_unit_interval(int n) {
  if (n < 0) throw std::invalid_argument("shifted_unit_interval: n must be >= 0");
  TestFunction u;
  u.kind_ = TestFnKind::StepSum;
  u.steps_ = {{static_cast<double>(n), static_cast<double>(n) + 1.0, 1.0}};
  u.support_ = SupportBall{Point::p1(n + 0.5), 0.5};
  u.sup_norm_ = 1.0;
  return u;
}

TestFunction TestFunction::step_sum(std::vector<Step> steps) {
  TestFunction u;
  u.kind_ = TestFnKind::StepSum;
  u.steps_ = sort_steps(std::move(steps));
  u.steps_.erase(std::remove_if(u.steps_.begin(), u.steps_.end(),
                                [](const Step& s) { return s.height == 0.0; }),
                 u.steps_.end());
  if (u.steps_.empty()) return zero();
  const double lo = u.steps_.front().lo, hi = u.steps_.back().hi;
  u.support_ = SupportBall{Point::p1(0.5 * (lo + hi)), 0.5 * (hi - lo)};
  for (const Step& s : u.steps_) u.sup_norm_ = std::max(u.sup_norm_, std::abs(s.height));
  return u;
}

TestFunction TestFunction::scaled(double c, const TestFunction& inner) {
  if (c == 0.0) {
    TestFunction u = zero();
    u.support_ = inner.support_;
    return u;
  }
  TestFunction u = inner;
  u.height_ *= c;
  for (Step& s : u.steps_) s.height *= c;
  u.sup_norm_ = std::abs(c) * inner.sup_norm_;
  return u;
}

double TestFunction::eval(const Space& space, const Point& x) const {
  switch (kind_) {
    case TestFnKind::Zero:
      return 0.0;
    case TestFnKind::IndicatorBall:
      return space.distance(ball_.center, x) <= ball_.radius ? height_ : 0.0;
    case TestFnKind::StepSum: {
      const double v = x.x();
      for (const Step& s : steps_)
        if (s.contains(v)) return s.height;
      return 0.0;
    }
    case TestFnKind::BallClipInside:
      return (space.distance(ball_.center, x) <= ball_.radius &&
              space.distance(clip_.center, x) <= clip_.radius)
                 ? height_
                 : 0.0;
    case TestFnKind::BallClipOutside:
      return (space.distance(ball_.center, x) <= ball_.radius &&
              space.distance(clip_.center, x) > clip_.radius)
                 ? height_
                 : 0.0;
  }
  return 0.0;
}

SupportBall TestFunction::support_ball(const Space& space) const {
  (void)space;
  if (!support_) throw std::invalid_argument("test function has unbounded/undeclared support");
  return *support_;
}

bool TestFunction::piecewise_on_line(const Space& space) const {
  if (!space.is_line_kind()) return false;
  return true;  // every built-in kind is piecewise constant on the line chart
}

std::vector<Step> TestFunction::line_steps(const Space& space) const {
  if (!space.is_line_kind())
    throw std::invalid_argument("line_steps: space is not a line kind");
  switch (kind_) {
    case TestFnKind::Zero:
      return {};
    case TestFnKind::StepSum:
      return steps_;
    case TestFnKind::IndicatorBall:
      return {{ball_.center.x() - ball_.radius, ball_.center.x() + ball_.radius, height_}};
    case TestFnKind::BallClipInside: {
      const double lo = std::max(ball_.center.x() - ball_.radius, clip_.center.x() - clip_.radius);
      const double hi = std::min(ball_.center.x() + ball_.radius, clip_.center.x() + clip_.radius);
      if (hi <= lo) return {};
      return {{lo, hi, height_}};
    }
    case TestFnKind::BallClipOutside: {
      const double blo = ball_.center.x() - ball_.radius, bhi = ball_.center.x() + ball_.radius;
      const double clo = clip_.center.x() - clip_.radius, chi = clip_.center.x() + clip_.radius;
      std::vector<Step> out;
      if (clo > blo) out.push_back({blo, std::min(clo, bhi), height_, false, true});
      if (chi < bhi) out.push_back({std::max(chi, blo), bhi, height_, true, false});
      return out;
    }
  }
  return {};
}

double TestFunction::lp_norm_p(const Space& space, double p) const {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_p: p must be >= 1");
  if (kind_ == TestFnKind::Zero) return 0.0;
  if (space.is_line_kind()) {
    const LineWeight& w = space.line_weight();
    double s = 0.0;
    for (const Step& st : line_steps(space))
      s += std::pow(std::abs(st.height), p) * w.integrate(st.lo, st.hi);
    return s;
  }
  const double hp = std::pow(std::abs(height_), p);
  switch (kind_) {
    case TestFnKind::IndicatorBall:
      return hp * space.ball_volume(ball_.center, ball_.radius);
    case TestFnKind::BallClipInside:
    case TestFnKind::BallClipOutside: {
      double inter = 0.0;
      if (space.kind() == SpaceKind::EuclideanLp && space.dim() == 2 && space.lq() == 2.0) {
        const double d = space.distance(ball_.center, clip_.center);
        inter = lens_area(d, ball_.radius, clip_.radius);
      } else if (space.kind() == SpaceKind::EuclideanLp && space.dim() == 2 &&
                 std::isinf(space.lq())) {
        inter = square_overlap(ball_.center, ball_.radius, clip_.center, clip_.radius);
      } else {
        throw std::invalid_argument(
            "lp_norm_p: partial ball truncation has no exact volume on this space kind");
      }
      const double full = space.ball_volume(ball_.center, ball_.radius);
      return hp * (kind_ == TestFnKind::BallClipInside ? inter : full - inter);
    }
    default:
      throw std::invalid_argument("lp_norm_p: kind not supported on this space");
  }
}

struct TruncationOps {
  static void set_clip(TestFunction& f, TestFnKind k, const SupportBall& clip) {
    f.kind_ = k;
    f.clip_ = clip;
  }
};

TruncationPair truncate(const Space& space, const TestFunction& u, const Point& x0,
                        double R) {
  if (!(R > 0.0)) throw std::invalid_argument("truncate: R must be > 0");
  TruncationPair pair;
  pair.x0 = x0;
  pair.R = R;
  if (u.fn_kind() == TestFnKind::Zero) {
    pair.u_R = u;
    pair.v_R = TestFunction::zero();
    return pair;
  }
  if (space.is_line_kind()) {
    const double wlo = x0.x() - R, whi = x0.x() + R;
    std::vector<Step> inside, outside;
    for (const Step& s : u.line_steps(space)) {
      const double ilo = std::max(s.lo, wlo), ihi = std::min(s.hi, whi);
      if (ihi > ilo)
        inside.push_back({ilo, ihi, s.height, s.lo_open && ilo == s.lo,
                          s.hi_open && ihi == s.hi});
      if (s.lo < wlo) {
        const double hi2 = std::min(s.hi, wlo);
        outside.push_back({s.lo, hi2, s.height, s.lo_open, hi2 == wlo ? true : s.hi_open});
      }
      if (s.hi > whi) {
        const double lo2 = std::max(s.lo, whi);
        outside.push_back({lo2, s.hi, s.height, lo2 == whi, s.hi_open});
      }
    }
    pair.u_R = inside.empty() ? TestFunction::zero() : TestFunction::step_sum(inside);
    pair.v_R = outside.empty() ? TestFunction::zero() : TestFunction::step_sum(outside);
    return pair;
  }
  // ball-kind u on a multi-dimensional space
  const SupportBall geom = u.indicator_ball_geometry();
  const double d = space.distance(x0, geom.center);
  if (d + geom.radius <= R) {
    pair.u_R = u;
    pair.v_R = TestFunction::zero();
  } else if (d - geom.radius >= R) {
    pair.u_R = TestFunction::zero();
    pair.v_R = u;
  } else {
    TestFunction in = u, out = u;
    TruncationOps::set_clip(in, TestFnKind::BallClipInside, SupportBall{x0, R});
    TruncationOps::set_clip(out, TestFnKind::BallClipOutside, SupportBall{x0, R});
    pair.u_R = in;
    pair.v_R = out;
  }
  return pair;
}

SupportRegionSampler::SupportRegionSampler(const Space& space, const TestFunction& u,
                                           double p)
    : space_(space), u_(u), p_(p) {
  if (!u.support_bounded())
    throw std::invalid_argument(
        "support sampler requires a bounded declared support; split unbounded u with "
        "truncate() first");
  region_ = u.support_ball(space);
  if (!(region_.radius > 0.0))
    throw std::invalid_argument("support sampler: empty declared support");
  region_mass_ = space.ball_volume(region_.center, region_.radius);
  norm_p_ = u.lp_norm_p(space, p);
  if (norm_p_ > 0.0 && space.is_line_kind()) {
    steps_ = u.line_steps(space);
    double acc = 0.0;
    for (const Step& s : steps_) {
      acc += std::pow(std::abs(s.height), p) * space.line_weight().integrate(s.lo, s.hi);
      step_cum_.push_back(acc);
    }
  }
}

WeightedSample SupportRegionSampler::draw(RngStream& rng) const {
  Point x;
  const bool up_component = norm_p_ > 0.0 && rng.uniform() < 0.5;
  if (!up_component) {
    x = space_.sample_ball(region_.center, region_.radius, rng);
  } else if (!steps_.empty()) {
    const double t = rng.open01() * step_cum_.back();
    const size_t i = static_cast<size_t>(
        std::lower_bound(step_cum_.begin(), step_cum_.end(), t) - step_cum_.begin());
    const Step& s = steps_[std::min(i, steps_.size() - 1)];
    const LineWeight& w = space_.line_weight();
    const double mass = w.integrate(s.lo, s.hi);
    x = Point::p1(w.invert_mass(s.lo, rng.open01() * mass));
  } else {
    // ball-kind u: |u|^p is constant on its indicator ball
    const SupportBall b = u_.indicator_ball_geometry();
    x = space_.sample_ball(b.center, b.radius, rng);
  }
  return {x, density(x)};
}

double SupportRegionSampler::density(const Point& x) const {
  double g = 0.5 / region_mass_;
  if (norm_p_ > 0.0) {
    g += 0.5 * std::pow(std::abs(u_.eval(space_, x)), p_) / norm_p_;
  } else {
    g = 1.0 / region_mass_;
  }
  return g;
}

WeightedSample sample_support_region(const Space& space, const TestFunction& u, double p,
                                     RngStream& rng) {
  return SupportRegionSampler(space, u, p).draw(rng);
}

}  // namespace weaklab
