#include "weaklab/line_weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weaklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// b^k - a^k computed as (b-a) * sum_j b^j a^(k-1-j); avoids cancellation when
// a and b are large and close.
double pow_diff(double a, double b, int k) {
  double s = 0.0, bp = 1.0;
  for (int j = 0; j < k; ++j) {
    double ap = 1.0;
    for (int i = 0; i < k - 1 - j; ++i) ap *= a;
    s += bp * ap;
    bp *= b;
  }
  return (b - a) * s;
}

}  // namespace

LineWeight LineWeight::constant(double value) {
  LineWeight w;
  w.coefs_ = {{value}};
  return w;
}

LineWeight LineWeight::one_plus_abs() {
  LineWeight w;
  w.breaks_ = {0.0};
  w.coefs_ = {{1.0, -1.0}, {1.0, 1.0}};
  return w;
}

LineWeight LineWeight::window(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("LineWeight::window: lo must be < hi");
  LineWeight w;
  w.breaks_ = {lo, hi};
  w.coefs_ = {{0.0}, {1.0}, {0.0}};
  return w;
}

LineWeight LineWeight::alternating_annuli(const std::vector<double>& radii, double low,
                                          double high) {
  if (radii.empty()) throw std::invalid_argument("alternating_annuli: no radii");
  if (!(low > 0.0) || !(high > low))
    throw std::invalid_argument("alternating_annuli: need 0 < low < high");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev)) throw std::invalid_argument("alternating_annuli: radii not increasing");
    prev = r;
  }
  LineWeight w;
  const int n = static_cast<int>(radii.size());
  // pieces: (-inf,-r_n), ..., (-r_1, r_1), ..., (r_n, inf); annulus k is
  // 1-indexed, odd -> low.
  for (int i = n; i >= 1; --i) w.breaks_.push_back(-radii[i - 1]);
  for (int i = 1; i <= n; ++i) w.breaks_.push_back(radii[i - 1]);
  auto level = [&](int annulus) { return (annulus % 2 == 1) ? low : high; };
  for (int i = n + 1; i >= 1; --i) w.coefs_.push_back({level(i)});
  for (int i = 2; i <= n + 1; ++i) w.coefs_.push_back({level(i)});
  return w;
}

int LineWeight::piece_index(double x) const {
  return static_cast<int>(std::upper_bound(breaks_.begin(), breaks_.end(), x) -
                          breaks_.begin());
}

double LineWeight::eval(double x) const {
  const auto& c = coefs_[piece_index(x)];
  double v = 0.0, xp = 1.0;
  for (double ck : c) {
    v += ck * xp;
    xp *= x;
  }
  return v;
}

double LineWeight::piece_integral(int piece, double a, double b) const {
  const auto& c = coefs_[piece];
  double s = 0.0;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0.0) s += c[k] * pow_diff(a, b, static_cast<int>(k) + 1) / (k + 1);
  }
  return s;
}

double LineWeight::integrate(double a, double b) const {
  if (!(b > a)) return 0.0;
  const int pa = piece_index(a), pb = piece_index(b);
  if (pa == pb) return piece_integral(pa, a, b);
  double s = piece_integral(pa, a, breaks_[pa]);
  for (int p = pa + 1; p < pb; ++p) s += piece_integral(p, breaks_[p - 1], breaks_[p]);
  s += piece_integral(pb, breaks_[pb - 1], b);
  return s;
}

double LineWeight::invert_mass(double from, double target) const {
  if (target <= 0.0) return from;
  double acc = 0.0;
  int p = piece_index(from);
  double lo = from;
  const int last = static_cast<int>(coefs_.size()) - 1;
  for (;;) {
    const double hi = (p < last) ? breaks_[p] : kInf;
    if (p == last || std::isinf(hi)) break;
    const double m = piece_integral(p, lo, hi);
    if (acc + m >= target) break;
    acc += m;
    lo = hi;
    ++p;
  }
  // bisect inside piece p starting at lo
  double need = target - acc;
  double a = lo;
  double b = (p < last) ? breaks_[p] : std::max(lo * 2.0 + 1.0, lo + 1.0);
  // expand b until enough mass (unbounded last piece)
  while (piece_integral(p, lo, b) < need) {
    a = b;
    b = 2.0 * b + 1.0;
    if (!std::isfinite(b)) throw std::runtime_error("invert_mass: target beyond total mass");
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (a + b);
    if (piece_integral(p, lo, mid) < need)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

std::pair<double, double> LineWeight::positive_domain() const {
  // edges of piece i: [edge(i-1), edge(i)]
  auto edge = [&](int i) {
    if (i < 0) return -kInf;
    if (i >= static_cast<int>(breaks_.size())) return kInf;
    return breaks_[i];
  };
  auto zero_piece = [&](int i) {
    for (double c : coefs_[i])
      if (c != 0.0) return false;
    return true;
  };
  int first = 0, last = static_cast<int>(coefs_.size()) - 1;
  while (first <= last && zero_piece(first)) ++first;
  while (last >= first && zero_piece(last)) --last;
  if (first > last) return {0.0, 0.0};
  return {edge(first - 1), edge(last)};
}

}  // namespace weaklab
