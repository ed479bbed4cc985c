#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "weaklab/line_weight.hpp"
#include "weaklab/rng.hpp"

namespace weaklab {

struct Point {
  std::array<double, 3> c{0.0, 0.0, 0.0};
  int dim = 1;

  static Point p1(double x) { return {{x, 0.0, 0.0}, 1}; }
  static Point p2(double x, double y) { return {{x, y, 0.0}, 2}; }
  static Point p3(double x, double y, double z) { return {{x, y, z}, 3}; }
  double x() const { return c[0]; }
  double y() const { return c[1]; }
  double t() const { return c[2]; }
  bool operator==(const Point&) const = default;
};

// Heisenberg group operations in (x, y, t) coordinates;
// (a·b).t = a.t + b.t + (a.x b.y - a.y b.x) / 2.
Point heis_mul(const Point& a, const Point& b);
Point heis_inv(const Point& a);
/// Cygan-Koranyi gauge ((x^2+y^2)^2 + 16 t^2)^{1/4}.
double heis_gauge(const Point& g);

/// Lebesgue volume of the unit Lq ball in R^n (q may be +inf).
double lq_unit_ball_volume(int n, double q);

enum class SpaceKind {
  EuclideanLp,
  WeightedLine,
  Heisenberg,
  HyperbolicHalfPlane,
  OscillatingLine,
  FiniteInterval,
};

struct DeclaredProfile {
  std::optional<double> C_a, C_A, C_d, AVR;
  bool total_mass_finite = false;
};

/// A metric measure space: distance rule, measure, exact ball volumes, and
/// nu-uniform ball samplers. Immutable after construction; all operations are
/// pure given an explicit RngStream.
class Space {
 public:
  static Space euclidean_lp(int dim, double q);
  static Space weighted_line();  // density 1 + |x|
  static Space heisenberg();
  static Space hyperbolic_half_plane();
  static Space oscillating_line(double m, double M, std::vector<double> radii);
  static Space finite_interval(double a, double b);

  SpaceKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double lq() const { return q_; }
  const Point& base_point() const { return base_; }
  Space with_base_point(const Point& p) const;

  bool is_line_kind() const;
  bool total_mass_finite() const { return kind_ == SpaceKind::FiniteInterval; }
  const LineWeight& line_weight() const;
  /// Chart domain for line kinds (finite only for FiniteInterval).
  std::pair<double, double> line_domain() const;
  std::pair<double, double> finite_interval_bounds() const { return {a_, b_}; }
  double oscillating_low() const { return m_; }
  double oscillating_high() const { return M_; }
  const std::vector<double>& oscillating_radii() const { return radii_; }

  double distance(const Point& a, const Point& b) const;
  double ball_volume(const Point& center, double r) const;
  Point sample_ball(const Point& center, double r, RngStream& rng) const;

  /// Volume of the radius-1 ball (radius-r volumes scale exactly for the
  /// homogeneous kinds).
  double unit_ball_volume() const;
  /// Constants implied by the construction (Ahlfors/doubling/AVR); scenario
  /// files may override.
  const DeclaredProfile& default_profile() const { return profile_; }

 private:
  Space() = default;
  void check_point(const Point& p) const;

  SpaceKind kind_ = SpaceKind::EuclideanLp;
  int dim_ = 1;
  double q_ = 2.0;          // Lq exponent (inf allowed)
  double a_ = 0.0, b_ = 0.0;  // finite interval bounds
  double m_ = 0.0, M_ = 0.0;  // oscillating levels
  std::vector<double> radii_;
  LineWeight weight_ = LineWeight::constant(1.0);
  Point base_ = Point::p1(0.0);
  DeclaredProfile profile_;
};

}  // namespace weaklab
