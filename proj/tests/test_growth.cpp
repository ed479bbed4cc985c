#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "weaklab/growth.hpp"
#include "weaklab/rng.hpp"

using weaklab::GrowthFunction;

TEST_SUITE("growth") {

TEST_CASE("power evaluation and inverse") {
  const auto f2 = GrowthFunction::power(2.0);
  CHECK(f2.eval(3.0) == 9.0);
  CHECK(f2.invert(9.0) == 3.0);
  const auto f4 = GrowthFunction::power(4.0);
  CHECK(f4.eval(2.0) == 16.0);
}

TEST_CASE("cosh - 1 evaluation and inverse") {
  const auto f = GrowthFunction::cosh_minus_one();
  CHECK(f.eval(0.0) == 0.0);
  CHECK(f.invert(std::cosh(2.0) - 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  // precision near zero
  CHECK(f.invert(f.eval(1e-8)) == doctest::Approx(1e-8).epsilon(1e-9));
}

TEST_CASE("monotone table inverts a cubic") {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= 2000; ++i) {
    const double r = 10.0 * i / 2000.0;
    pts.emplace_back(r, r * r * r);
  }
  const auto f = GrowthFunction::monotone_table(pts);
  CHECK(f.invert(8.0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_THROWS_AS(f.eval(11.0), std::invalid_argument);
  CHECK_THROWS_AS(f.invert(2000.0), std::invalid_argument);
}

TEST_CASE("validity verdicts") {
  CHECK(GrowthFunction::power(1.0).check_validity().valid);
  CHECK(GrowthFunction::power(4.0).check_validity().valid);
  CHECK(GrowthFunction::cosh_minus_one().check_validity().valid);
  const auto sqrt_check = GrowthFunction::power(0.5).check_validity();
  CHECK_FALSE(sqrt_check.valid);
  CHECK(sqrt_check.detail == "concavity detected");
}

TEST_CASE("round trip f(f^{-1}(y)) = y") {
  weaklab::RngStream rng(31, 0);
  const auto fp = GrowthFunction::power(2.7);
  const auto fc = GrowthFunction::cosh_minus_one();
  for (int i = 0; i < 1000; ++i) {
    const double y = std::pow(10.0, rng.uniform(-6.0, 6.0));
    CHECK(std::abs(fp.eval(fp.invert(y)) - y) <= 1e-10 * (1.0 + y));
    if (y < 1e100) CHECK(std::abs(fc.eval(fc.invert(y)) - y) <= 1e-10 * (1.0 + y));
  }
}

TEST_CASE("power path is the same code path as the f-variant") {
  // levelset always evaluates through GrowthFunction::eval, so Power(s) and a
  // generic f agree bit-for-bit with pow by construction
  const auto f = GrowthFunction::power(3.5);
  for (double r : {0.1, 1.0, 7.7, 123.0}) CHECK(f.eval(r) == std::pow(r, 3.5));
}

}  // TEST_SUITE
