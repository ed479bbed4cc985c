#pragma once

#include <cmath>
#include <utility>

namespace weaklab {

/// 5-point Gauss-Legendre on [a,b]; exact for polynomials of degree <= 9.
template <class F>
double gauss_legendre5(F&& f, double a, double b) {
  static constexpr double x1 = 0.5384693101056830910363144207;
  static constexpr double x2 = 0.9061798459386639927976268782;
  static constexpr double w0 = 0.5688888888888888888888888889;
  static constexpr double w1 = 0.4786286704993664680412915149;
  static constexpr double w2 = 0.2369268850561890875142640407;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = w0 * f(c);
  s += w1 * (f(c - h * x1) + f(c + h * x1));
  s += w2 * (f(c - h * x2) + f(c + h * x2));
  return s * h;
}

namespace detail {

// Gauss-Kronrod 7-15 pair on [a,b]; returns (kronrod, |kronrod - gauss|).
template <class F>
std::pair<double, double> gk15(F& f, double a, double b) {
  static constexpr double xgk[8] = {
      0.9914553711208126392068547, 0.9491079123427585245261897,
      0.8648644233597690727897128, 0.7415311855993944398638648,
      0.5860872354676911302941448, 0.4058451513773971669066064,
      0.2077849550078984676006894, 0.0};
  static constexpr double wgk[8] = {
      0.0229353220105292249637320, 0.0630920926299785532907007,
      0.1047900103222501838398763, 0.1406532597155259187451896,
      0.1690047266392679028265834, 0.1903505780647854099132564,
      0.2044329400752988924141620, 0.2094821410847278772750417};
  static constexpr double wg[4] = {
      0.1294849661688696932706114, 0.2797053914892766679014678,
      0.3818300505051189449503698, 0.4179591836734693877551020};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = wgk[7] * fc;
  double gauss = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double f1 = f(c - h * xgk[i]);
    const double f2 = f(c + h * xgk[i]);
    kron += wgk[i] * (f1 + f2);
    if (i % 2 == 1) gauss += wg[i / 2] * (f1 + f2);
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

template <class F>
double gk15_adaptive(F& f, double a, double b, double tol, int depth) {
  auto [value, err] = gk15(f, a, b);
  if (err <= tol || depth <= 0) return value;
  const double c = 0.5 * (a + b);
  return gk15_adaptive(f, a, c, 0.5 * tol, depth - 1) +
         gk15_adaptive(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod refinement to relative tolerance rel_tol.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-8,
                          double abs_tol = 1e-14, int max_depth = 48) {
  if (!(b > a)) return 0.0;
  auto [coarse, err0] = detail::gk15(f, a, b);
  (void)err0;
  const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
  return detail::gk15_adaptive(f, a, b, tol, max_depth);
}

}  // namespace weaklab
