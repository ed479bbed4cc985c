#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "weaklab/quadrature.hpp"
#include "weaklab/space.hpp"

using namespace weaklab;
using std::numbers::pi;

namespace {

Point random_point(const Space& s, RngStream& rng) {
  switch (s.kind()) {
    case SpaceKind::EuclideanLp: {
      Point p = s.base_point();
      for (int i = 0; i < s.dim(); ++i) p.c[i] = rng.uniform(-10.0, 10.0);
      return p;
    }
    case SpaceKind::WeightedLine:
    case SpaceKind::OscillatingLine:
      return Point::p1(rng.uniform(-50.0, 50.0));
    case SpaceKind::FiniteInterval: {
      auto [a, b] = s.finite_interval_bounds();
      return Point::p1(rng.uniform(a, b));
    }
    case SpaceKind::Heisenberg:
      return Point::p3(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                       rng.uniform(-5.0, 5.0));
    case SpaceKind::HyperbolicHalfPlane:
      return Point::p2(rng.uniform(-5.0, 5.0), std::exp(rng.uniform(-2.0, 2.0)));
  }
  return s.base_point();
}

std::vector<Space> all_kinds() {
  return {Space::euclidean_lp(1, 2.0),
          Space::euclidean_lp(2, 2.0),
          Space::euclidean_lp(2, std::numeric_limits<double>::infinity()),
          Space::euclidean_lp(2, 1.5),
          Space::euclidean_lp(3, 1.0),
          Space::weighted_line(),
          Space::oscillating_line(1.0, 2.0, {1, 5, 31, 249}),
          Space::finite_interval(0.0, 1.0),
          Space::heisenberg(),
          Space::hyperbolic_half_plane()};
}

}  // namespace

TEST_SUITE("space") {

TEST_CASE("distance examples") {
  CHECK(Space::euclidean_lp(2, 2.0).distance(Point::p2(0, 0), Point::p2(3, 4)) == 5.0);
  const auto linf = Space::euclidean_lp(2, std::numeric_limits<double>::infinity());
  CHECK(linf.distance(Point::p2(0, 0), Point::p2(3, 4)) == 4.0);
  const auto hyp = Space::hyperbolic_half_plane();
  CHECK(hyp.distance(Point::p2(0, 1), Point::p2(0, std::exp(1.0))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const auto heis = Space::heisenberg();
  // gauge of (0,0,1) is (16)^{1/4} = 2
  CHECK(heis.distance(Point::p3(0, 0, 0), Point::p3(0, 0, 1)) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("input errors") {
  const auto plane = Space::euclidean_lp(2, 2.0);
  CHECK_THROWS_AS(plane.distance(Point::p2(0, 0), Point::p1(0)), std::invalid_argument);
  CHECK_THROWS_AS(plane.ball_volume(Point::p2(0, 0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(plane.ball_volume(Point::p2(0, 0), -1.0), std::invalid_argument);
  const auto hyp = Space::hyperbolic_half_plane();
  CHECK_THROWS_AS(hyp.distance(Point::p2(0, 1), Point::p2(0, -1)), std::invalid_argument);
  RngStream rng(3, 3);
  CHECK_THROWS_AS(plane.sample_ball(Point::p2(0, 0), 0.0, rng), std::invalid_argument);
}

TEST_CASE("ball volume closed forms") {
  CHECK(Space::euclidean_lp(1, 2.0).ball_volume(Point::p1(3), 2.0) == 4.0);
  const auto wl = Space::weighted_line();
  CHECK(wl.ball_volume(Point::p1(0), 3.0) == doctest::Approx(15.0).epsilon(1e-15));
  CHECK(wl.ball_volume(Point::p1(1), 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  // the 0 < |x| <= r branch: x^2 + r^2 + 2r
  CHECK(wl.ball_volume(Point::p1(1), 2.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(Space::heisenberg().ball_volume(Point::p3(1, 2, 3), 1.0) ==
        doctest::Approx(pi * pi / 8.0).epsilon(1e-15));
  CHECK(Space::hyperbolic_half_plane().ball_volume(Point::p2(2, 5), 1.0) ==
        doctest::Approx(2.0 * pi * (std::cosh(1.0) - 1.0)).epsilon(1e-15));
  CHECK(Space::finite_interval(0, 1).ball_volume(Point::p1(0.1), 0.5) ==
        doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("heisenberg unit volume against rejection counting") {
  const double mc = oracles::heisenberg_unit_volume_mc(10000000, 424242);
  const double se = 2.0 * std::sqrt(0.617 * 0.383 / 1e7);
  CHECK(std::abs(mc - pi * pi / 8.0) < 4.0 * se);
}

TEST_CASE("hyperbolic ball volume against quadrature of 2 pi sinh") {
  for (double r : {0.5, 1.0, 3.0}) {
    const double q = oracles::integrate(
        [](double t) { return 2.0 * pi * std::sinh(t); }, 0.0, r);
    CHECK(Space::hyperbolic_half_plane().ball_volume(Point::p2(0, 1), r) ==
          doctest::Approx(q).epsilon(1e-10));
  }
}

TEST_CASE("line ball volumes match weight quadrature") {
  for (const Space& s :
       {Space::weighted_line(), Space::oscillating_line(1.0, 2.0, {1, 5, 31})}) {
    RngStream rng(88, 1);
    auto w = [&](double t) { return s.line_weight().eval(t); };
    for (int i = 0; i < 50; ++i) {
      const double x = rng.uniform(-40.0, 40.0);
      const double r = std::pow(10.0, rng.uniform(-2.0, 1.7));
      const double exact = s.ball_volume(Point::p1(x), r);
      // quadrature split at the weight's jump points
      std::vector<double> cuts{x - r, x + r};
      for (double b : s.line_weight().breaks())
        if (b > x - r && b < x + r) cuts.push_back(b);
      std::sort(cuts.begin(), cuts.end());
      double quad = 0.0;
      for (size_t k = 0; k + 1 < cuts.size(); ++k)
        quad += integrate_adaptive(w, cuts[k], cuts[k + 1], 1e-12);
      CHECK(exact == doctest::Approx(quad).epsilon(1e-9));
    }
  }
}

TEST_CASE("distance symmetry and triangle inequality") {
  for (const Space& s : all_kinds()) {
    RngStream rng(17, static_cast<uint64_t>(s.kind()) * 4 + s.dim());
    for (int i = 0; i < 10000; ++i) {
      const Point a = random_point(s, rng), b = random_point(s, rng),
                  c = random_point(s, rng);
      const double dab = s.distance(a, b);
      CHECK(std::abs(dab - s.distance(b, a)) <= 1e-12 * (1.0 + dab));
      CHECK(s.distance(a, c) <= dab + s.distance(b, c) + 1e-10);
      CHECK(s.distance(a, a) == 0.0);
    }
  }
}

TEST_CASE("heisenberg left invariance") {
  const auto heis = Space::heisenberg();
  RngStream rng(19, 0);
  for (int i = 0; i < 10000; ++i) {
    const Point a = random_point(heis, rng), b = random_point(heis, rng),
                g = random_point(heis, rng);
    const double d = heis.distance(a, b);
    const double dg = heis.distance(heis_mul(g, a), heis_mul(g, b));
    CHECK(std::abs(d - dg) <= 1e-10 * (1.0 + d));
  }
}

TEST_CASE("heisenberg dilation homogeneity of ball volumes") {
  const auto heis = Space::heisenberg();
  const double v1 = heis.ball_volume(Point::p3(0, 0, 0), 1.0);
  RngStream rng(21, 0);
  for (int i = 0; i < 100; ++i) {
    const double r = std::pow(10.0, rng.uniform(-3.0, 3.0));
    const double vr = heis.ball_volume(Point::p3(0, 0, 0), r);
    CHECK(std::abs(vr - r * r * r * r * v1) <= 1e-10 * vr);
  }
}

TEST_CASE("sampler examples") {
  {  // Lebesgue line: mean 0 within 3 SE
    const auto s = Space::euclidean_lp(1, 2.0);
    RngStream rng(23, 0);
    const int n = 100000;
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += s.sample_ball(Point::p1(0), 1.0, rng).x();
    CHECK(std::abs(sum / n) < 3.0 * (1.0 / std::sqrt(3.0)) / std::sqrt(double(n)));
  }
  {  // weighted line: fraction of B(0,1) mass in [0,1] is exactly 1/2
    const auto s = Space::weighted_line();
    RngStream rng(23, 1);
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
      const double x = s.sample_ball(Point::p1(0), 1.0, rng).x();
      if (x >= 0.0 && x <= 1.0) ++hits;
    }
    CHECK(std::abs(hits / double(n) - 0.5) < 3.0 * 0.5 / std::sqrt(double(n)));
  }
  {  // hyperbolic: fraction within distance 1/2 = (cosh(1/2)-1)/(cosh 1 - 1)
    const auto s = Space::hyperbolic_half_plane();
    const Point c = Point::p2(0, 1);
    const double p = (std::cosh(0.5) - 1.0) / (std::cosh(1.0) - 1.0);
    RngStream rng(23, 2);
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
      if (s.distance(c, s.sample_ball(c, 1.0, rng)) <= 0.5) ++hits;
    CHECK(std::abs(hits / double(n) - p) <
          3.0 * std::sqrt(p * (1 - p)) / std::sqrt(double(n)));
  }
}

TEST_CASE("sampler shell consistency (chi-square, 10 shells, 1e6 samples)") {
  for (const Space& s : all_kinds()) {
    const Point center = s.kind() == SpaceKind::FiniteInterval ? Point::p1(0.4)
                         : s.kind() == SpaceKind::HyperbolicHalfPlane
                             ? Point::p2(0.5, 2.0)
                             : s.base_point();
    const double R = s.kind() == SpaceKind::FiniteInterval ? 0.3 : 2.0;
    const double total = s.ball_volume(center, R);
    // shell edges with equal nu-mass, found on the exact volume profile
    std::vector<double> edges{0.0};
    for (int k = 1; k < 10; ++k) {
      double lo = 0.0, hi = R;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (s.ball_volume(center, std::max(mid, 1e-300)) < total * k / 10.0 ? lo : hi) = mid;
      }
      edges.push_back(0.5 * (lo + hi));
    }
    edges.push_back(R * (1.0 + 1e-12));
    const uint64_t n = 1000000;
    RngStream rng(29, static_cast<uint64_t>(s.kind()) * 64 + s.dim() * 8 +
                          (std::isinf(s.lq()) ? 7 : int(s.lq() * 2)));
    std::vector<uint64_t> counts(10, 0);
    for (uint64_t i = 0; i < n; ++i) {
      const double d = s.distance(center, s.sample_ball(center, R, rng));
      const auto it = std::upper_bound(edges.begin() + 1, edges.end(), d);
      const size_t bin = std::min<size_t>(it - edges.begin() - 1, 9);
      ++counts[bin];
    }
    const double stat = oracles::chi_square_equal(counts, double(n));
    INFO("kind ", static_cast<int>(s.kind()), " dim ", s.dim(), " q ", s.lq(),
         " chi2 ", stat);
    CHECK(stat < oracles::kChi2Crit9_999);
  }
}

TEST_CASE("lq unit ball volumes") {
  CHECK(lq_unit_ball_volume(2, 2.0) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(lq_unit_ball_volume(2, std::numeric_limits<double>::infinity()) == 4.0);
  CHECK(lq_unit_ball_volume(2, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lq_unit_ball_volume(3, 2.0) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
  // gamma-function fallback agrees with the specializations
  CHECK(std::exp(2 * (std::log(2.0) + std::lgamma(1.5)) - std::lgamma(2.0)) ==
        doctest::Approx(pi).epsilon(1e-12));
}

}  // TEST_SUITE
