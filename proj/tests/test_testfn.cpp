#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "weaklab/testfn.hpp"

using namespace weaklab;

TEST_SUITE("testfn") {

TEST_CASE("pointwise evaluation with closed boundaries") {
  const auto line = Space::euclidean_lp(1, 2.0);
  const auto u = TestFunction::indicator_ball(Point::p1(0.5), 0.5);  // 1_{[0,1]}
  CHECK(u.eval(line, Point::p1(0.5)) == 1.0);
  CHECK(u.eval(line, Point::p1(2.0)) == 0.0);
  CHECK(u.eval(line, Point::p1(0.0)) == 1.0);  // boundary counts as inside
  CHECK(u.eval(line, Point::p1(1.0)) == 1.0);
  const auto u3 = TestFunction::scaled(3.0, u);
  CHECK(u3.eval(line, Point::p1(0.5)) == 3.0);
  CHECK(TestFunction::zero().eval(line, Point::p1(0.0)) == 0.0);
}

TEST_CASE("lp norms") {
  const auto line = Space::euclidean_lp(1, 2.0);
  const auto u = TestFunction::indicator_ball(Point::p1(0.5), 0.5);
  for (double p : {1.0, 2.0, 3.7}) CHECK(u.lp_norm_p(line, p) == 1.0);

  const auto wl = Space::weighted_line();
  const auto u4 = TestFunction::shifted_unit_interval(4);
  for (double p : {1.0, 2.0}) CHECK(u4.lp_norm_p(wl, p) == doctest::Approx(5.5).epsilon(1e-14));

  const auto heis = Space::heisenberg();
  const auto ub = TestFunction::indicator_ball(Point::p3(0, 0, 0), 1.0);
  CHECK(ub.lp_norm_p(heis, 1.0) ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 8.0).epsilon(1e-14));
}

TEST_CASE("norm homogeneity under scaling") {
  const auto wl = Space::weighted_line();
  const auto u = TestFunction::step_sum({{0, 1, 1.0}, {3, 4, -2.0}});
  for (double p : {1.0, 2.0, 3.0}) {
    for (double c : {2.0, -0.5, 7.25}) {
      const double lhs = TestFunction::scaled(c, u).lp_norm_p(wl, p);
      const double rhs = std::pow(std::abs(c), p) * u.lp_norm_p(wl, p);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("truncation splits intervals exactly") {
  const auto line = Space::euclidean_lp(1, 2.0);
  const auto u = TestFunction::indicator_ball(Point::p1(1.0), 1.0);  // 1_{[0,2]}
  const auto pair = truncate(line, u, Point::p1(0), 1.0);
  // u_R = 1_{[0,1]}, v_R = 1_{(1,2]}
  CHECK(pair.u_R.lp_norm_p(line, 1.0) == doctest::Approx(1.0));
  CHECK(pair.v_R.lp_norm_p(line, 1.0) == doctest::Approx(1.0));
  CHECK(pair.u_R.eval(line, Point::p1(1.0)) == 1.0);
  CHECK(pair.v_R.eval(line, Point::p1(1.0)) == 0.0);  // open at the cut
  // disjoint-support additivity
  for (double p : {1.0, 2.0, 5.0})
    CHECK(pair.u_R.lp_norm_p(line, p) + pair.v_R.lp_norm_p(line, p) ==
          doctest::Approx(u.lp_norm_p(line, p)).epsilon(1e-14));
}

TEST_CASE("truncation with containment") {
  const auto line = Space::euclidean_lp(1, 2.0);
  const auto u = TestFunction::indicator_ball(Point::p1(0.5), 0.5);
  const auto pair = truncate(line, u, Point::p1(0), 5.0);
  CHECK(pair.v_R.fn_kind() == TestFnKind::Zero);
  CHECK(pair.u_R.lp_norm_p(line, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("truncation pair sums to u on random probes") {
  const auto wl = Space::weighted_line();
  const auto u = TestFunction::step_sum({{-2, -1, 2.0}, {0, 1, 1.0}, {1, 3, -1.0}});
  RngStream rng(41, 0);
  for (double R : {0.5, 1.0, 2.5}) {
    const auto pair = truncate(wl, u, Point::p1(0.25), R);
    for (int i = 0; i < 10000; ++i) {
      const Point x = Point::p1(rng.uniform(-4.0, 4.0));
      const double lhs = pair.u_R.eval(wl, x) + pair.v_R.eval(wl, x);
      CHECK(lhs == u.eval(wl, x));
      // u_R vanishes outside the ball, v_R inside
      const double d = std::abs(x.x() - 0.25);
      if (d > R) CHECK(pair.u_R.eval(wl, x) == 0.0);
      if (d < R) CHECK(pair.v_R.eval(wl, x) == 0.0);
    }
  }
}

TEST_CASE("truncation on the plane: containment and partial overlap") {
  const auto plane = Space::euclidean_lp(2, 2.0);
  const auto u = TestFunction::indicator_ball(Point::p2(0, 0), 1.0);
  const auto contained = truncate(plane, u, Point::p2(0, 0), 3.0);
  CHECK(contained.v_R.fn_kind() == TestFnKind::Zero);
  const auto partial = truncate(plane, u, Point::p2(1.0, 0), 0.8);
  RngStream rng(43, 0);
  for (int i = 0; i < 10000; ++i) {
    const Point x = Point::p2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    CHECK(partial.u_R.eval(plane, x) + partial.v_R.eval(plane, x) == u.eval(plane, x));
  }
  // the lens volume splits the norm exactly
  const double lhs =
      partial.u_R.lp_norm_p(plane, 2.0) + partial.v_R.lp_norm_p(plane, 2.0);
  CHECK(lhs == doctest::Approx(u.lp_norm_p(plane, 2.0)).epsilon(1e-12));
}

TEST_CASE("truncation exhaustion: the tail norm reaches zero at finite R") {
  const auto wl = Space::weighted_line();
  const auto u = TestFunction::step_sum({{-3, -1, 1.0}, {2, 5, 2.0}});
  double prev = u.lp_norm_p(wl, 2.0);
  bool reached_zero = false;
  for (double R = 0.5; R < 64.0; R *= 2.0) {
    const auto pair = truncate(wl, u, Point::p1(0), R);
    const double tail = pair.v_R.lp_norm_p(wl, 2.0);
    CHECK(tail <= prev + 1e-12);
    prev = tail;
    if (tail == 0.0) reached_zero = true;
  }
  CHECK(reached_zero);
}

TEST_CASE("support region sampler: indicator density is exactly 1/nu(D)") {
  const auto line = Space::euclidean_lp(1, 2.0);
  const auto u = TestFunction::indicator_ball(Point::p1(0.5), 0.5);
  RngStream rng(47, 0);
  for (int i = 0; i < 1000; ++i) {
    const WeightedSample s = sample_support_region(line, u, 1.0, rng);
    CHECK(s.density_value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.point.x() >= 0.0);
    CHECK(s.point.x() <= 1.0);
  }
}

TEST_CASE("support region sampler: weighted-line mass fractions") {
  const auto wl = Space::weighted_line();
  const auto u = TestFunction::indicator_ball(Point::p1(4.5), 0.5);  // 1_{[4,5]}
  SupportRegionSampler sampler(wl, u, 1.0);
  RngStream rng(47, 1);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (sampler.draw(rng).point.x() <= 4.5) ++hits;
  const double expect = 2.625 / 5.5;  // nu([4,4.5]) / nu([4,5])
  CHECK(std::abs(hits / double(n) - expect) <
        3.0 * std::sqrt(expect * (1 - expect)) / std::sqrt(double(n)));
}

TEST_CASE("support region sampler: zero function falls back to uniform") {
  const auto line = Space::euclidean_lp(1, 2.0);
  const auto u = TestFunction::zero_with_support({Point::p1(0.5), 0.5});
  RngStream rng(47, 2);
  double sum = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const WeightedSample s = sample_support_region(line, u, 1.0, rng);
    CHECK(s.density_value == doctest::Approx(1.0));
    sum += s.point.x();
  }
  CHECK(std::abs(sum / n - 0.5) < 3.0 * (1.0 / std::sqrt(12.0)) / std::sqrt(double(n)));
}

TEST_CASE("unbounded support is rejected") {
  const auto line = Space::euclidean_lp(1, 2.0);
  CHECK_THROWS_AS(SupportRegionSampler(line, TestFunction::zero(), 1.0),
                  std::invalid_argument);
}

}  // TEST_SUITE
