#pragma once

#include <optional>
#include <vector>

#include "weaklab/space.hpp"

namespace weaklab {

/// One constant piece of a line test function. Closed endpoints by default;
/// truncation marks cut edges open so that u_R + v_R = u holds pointwise.
struct Step {
  double lo = 0.0, hi = 0.0;
  double height = 0.0;
  bool lo_open = false, hi_open = false;

  bool contains(double x) const {
    return (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
};

struct SupportBall {
  Point center;
  double radius = 0.0;  // 0 = empty support
};

enum class TestFnKind {
  Zero,
  IndicatorBall,
  StepSum,
  BallClipInside,   // indicator ball restricted to a clip ball
  BallClipOutside,  // indicator ball minus a clip ball
};

/// Measurable test function u with exact evaluation, exact Lp norms for all
/// built-in kinds, and the truncation split u = u_R + v_R.
class TestFunction {
 public:
  static TestFunction zero();
  static TestFunction zero_with_support(SupportBall declared);
  static TestFunction indicator_ball(Point center, double radius);
  static TestFunction shifted_unit_interval(int n);  // 1_{[n, n+1]} on line kinds
  static TestFunction step_sum(std::vector<Step> steps);
  static TestFunction scaled(double c, const TestFunction& inner);

  TestFnKind fn_kind() const { return kind_; }
  double eval(const Space& space, const Point& x) const;
  double sup_norm() const { return sup_norm_; }
  bool support_bounded() const { return support_.has_value(); }
  /// Declared ball containing the support (center + radius).
  SupportBall support_ball(const Space& space) const;
  /// p-th power of the Lp norm, exact for built-in kinds.
  double lp_norm_p(const Space& space, double p) const;

  /// True when the function is piecewise constant along the line chart.
  bool piecewise_on_line(const Space& space) const;
  /// Nonzero steps, sorted and disjoint (line kinds only).
  std::vector<Step> line_steps(const Space& space) const;

  double indicator_height() const { return height_; }
  const SupportBall& indicator_ball_geometry() const { return ball_; }

 private:
  friend struct TruncationOps;
  TestFnKind kind_ = TestFnKind::Zero;
  double height_ = 0.0;                  // ball kinds
  SupportBall ball_;                     // ball kinds: the indicator ball
  SupportBall clip_;                     // clip kinds: the truncation ball
  std::vector<Step> steps_;              // StepSum
  std::optional<SupportBall> support_;   // declared support ball
  double sup_norm_ = 0.0;
};

struct TruncationPair {
  TestFunction u_R, v_R;
  Point x0;
  double R = 0.0;
};

/// Splits u into u_R = u * 1_{B(x0,R)} and v_R = u - u_R. Exact interval
/// clipping on line kinds; ball containment tests otherwise.
TruncationPair truncate(const Space& space, const TestFunction& u, const Point& x0,
                        double R);

struct WeightedSample {
  Point point;
  double density_value = 0.0;  // proposal density w.r.t. nu at the point
};

/// Equal mixture of nu-uniform-on-support and |u|^p-proportional draws over
/// the declared support ball; densities are exact.
class SupportRegionSampler {
 public:
  SupportRegionSampler(const Space& space, const TestFunction& u, double p);
  WeightedSample draw(RngStream& rng) const;
  double density(const Point& x) const;
  const SupportBall& region() const { return region_; }
  double region_mass() const { return region_mass_; }
  double norm_p() const { return norm_p_; }

 private:
  const Space& space_;
  const TestFunction& u_;
  double p_;
  SupportBall region_;
  double region_mass_ = 0.0;
  double norm_p_ = 0.0;
  // step table for |u|^p-proportional sampling on line kinds
  std::vector<Step> steps_;
  std::vector<double> step_cum_;  // cumulative |h|^p * nu(step)
};

WeightedSample sample_support_region(const Space& space, const TestFunction& u, double p,
                                     RngStream& rng);

}  // namespace weaklab
