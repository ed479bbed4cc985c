#pragma once

#include <utility>
#include <vector>

namespace weaklab {

/// Piecewise-polynomial density on the real line. Piece i covers
/// [edge(i-1), edge(i)) where edge(-1) = -inf and edge(n-1) = +inf are
/// implied; all built-in profiles have degree <= 1, integration is exact.
class LineWeight {
 public:
  static LineWeight constant(double value);
  static LineWeight one_plus_abs();
  /// 1 on [lo, hi], 0 elsewhere.
  static LineWeight window(double lo, double hi);
  /// Radial two-level profile: value `low` on B(0,r_n)\B(0,r_{n-1}) for odd n,
  /// `high` for even n; the annulus after the last radius extends to infinity.
  static LineWeight alternating_annuli(const std::vector<double>& radii, double low,
                                       double high);

  double eval(double x) const;
  /// Exact integral over [a, b] (a <= b).
  double integrate(double a, double b) const;
  /// Smallest x >= from with integrate(from, x) == target.
  double invert_mass(double from, double target) const;
  const std::vector<double>& breaks() const { return breaks_; }
  /// Hull of {w > 0}; endpoints may be infinite.
  std::pair<double, double> positive_domain() const;

 private:
  std::vector<double> breaks_;              // size n-1 for n pieces
  std::vector<std::vector<double>> coefs_;  // per-piece polynomial coefficients
  int piece_index(double x) const;
  double piece_integral(int piece, double a, double b) const;
};

}  // namespace weaklab
