#pragma once

#include <string>
#include <utility>
#include <vector>

namespace weaklab {

enum class GrowthKind { Power, CoshMinusOne, MonotoneTable };

struct GrowthCheck {
  bool valid = true;
  bool zero_at_zero = true;
  bool increasing = true;
  bool convex = true;
  std::string detail;  // first violated property, empty when valid
};

/// Volume-growth profile f: strictly increasing, f(0) = 0, with inverse.
/// Power(s) is f(r) = r^s; CoshMinusOne is f(r) = cosh r - 1; tables use
/// monotone cubic (Fritsch-Carlson) interpolation so the inverse stays
/// well defined.
class GrowthFunction {
 public:
  static GrowthFunction power(double s);
  static GrowthFunction cosh_minus_one();
  static GrowthFunction monotone_table(std::vector<std::pair<double, double>> points);

  GrowthKind kind() const { return kind_; }
  double power_exponent() const { return s_; }
  /// +inf except for tables.
  double domain_max() const;

  double eval(double r) const;
  double invert(double y) const;
  GrowthCheck check_validity() const;

 private:
  GrowthFunction() = default;
  GrowthKind kind_ = GrowthKind::Power;
  double s_ = 1.0;
  std::vector<double> xs_, ys_, ms_;  // table nodes and tangents
};

}  // namespace weaklab
