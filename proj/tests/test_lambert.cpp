#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "ordent/lambert.hpp"

using ordent::lambert_w0;

TEST(LambertW, SpecialValues) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(-std::exp(-1.0)), -1.0, 1e-12);
  EXPECT_NEAR(lambert_w0(std::exp(1.0)), 1.0, 1e-15);
  EXPECT_NEAR(lambert_w0(2.0 * std::exp(2.0)), 2.0, 1e-14);
  EXPECT_EQ(lambert_w0(std::numeric_limits<double>::infinity()), std::numeric_limits<double>::infinity());
}

TEST(LambertW, DomainErrors) {
  EXPECT_THROW(lambert_w0(-0.37), std::domain_error);
  EXPECT_THROW(lambert_w0(std::nan("")), std::domain_error);
  EXPECT_THROW(lambert_w0(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(LambertW, IdentityOnLogGrid) {
  // W(x ln x) = ln x for x >= 1/e
  const double lo = std::log(std::exp(-1.0)), hi = std::log(1e6);
  for (int k = 0; k < 1000; ++k) {
    const double x = std::exp(lo + (hi - lo) * k / 999.0);
    const double expect = std::log(x);
    const double got = lambert_w0(x * std::log(x));
    ASSERT_LE(std::abs(got - expect), 1e-12 * std::max(1.0, std::abs(expect))) << "x=" << x;
  }
}

TEST(LambertW, DefiningEquationAndMonotone) {
  double prev = -1.0;
  for (int k = 0; k <= 4000; ++k) {
    const double x = -std::exp(-1.0) + 1e-9 + std::pow(10.0, -8.0 + 16.0 * k / 4000.0);
    const double w = lambert_w0(x);
    ASSERT_GT(w, prev);
    ASSERT_NEAR(w * std::exp(w), x, 1e-13 * std::max(1.0, std::abs(x)));
    prev = w;
  }
}

TEST(LambertW, MatchesBisectionNearBranchPoint) {
  for (double d : {1e-14, 1e-12, 1e-9, 1e-6, 1e-3, 0.05, 0.2}) {
    const double x = -std::exp(-1.0) + d;
    const double w = oracle::bisect([x](double v) { return v * std::exp(v) - x; }, -1.0, 0.0);
    // the oracle itself is only good to ~1e-8 here: w e^w - x is flat at w = -1
    EXPECT_NEAR(lambert_w0(x), w, 2e-8) << "d=" << d;
  }
}
