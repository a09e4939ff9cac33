#include <gtest/gtest.h>

#include <cmath>

#include "swkb/root_finding.hpp"

namespace {

TEST(FindIncreasingRoot, Cubic) {
  auto f = [](double x) { return x * x * x - 2.0; };
  const auto r = swkb::find_increasing_root(f, 0.0, f(0.0), 3.0, {1e-13, 200, 64});
  EXPECT_NEAR(r.x, std::cbrt(2.0), 1e-12);
  EXPECT_LE(r.residual, 1e-13);
  EXPECT_GT(r.iterations, 0);
}

TEST(FindIncreasingRoot, ExpandsBracket) {
  auto f = [](double x) { return x - 1000.0; };
  const auto r = swkb::find_increasing_root(f, 0.0, f(0.0), 1.0);
  EXPECT_NEAR(r.x, 1000.0, 1e-9);
}

TEST(FindIncreasingRoot, FlatThenSteep) {
  // false position alone stalls on this shape; the forced bisections rescue it
  auto f = [](double x) { return std::exp(20.0 * x) - 2.0; };
  const auto r = swkb::find_increasing_root(f, 0.0, f(0.0), 1.0);
  EXPECT_NEAR(r.x, std::log(2.0) / 20.0, 1e-10);
  EXPECT_LT(r.iterations, 200);
}

TEST(FindIncreasingRoot, RootAtLowerEdge) {
  auto f = [](double x) { return x; };
  const auto r = swkb::find_increasing_root(f, 0.0, 0.0, 1.0);
  EXPECT_EQ(r.x, 0.0);
  EXPECT_EQ(r.iterations, 0);
}

TEST(FindIncreasingRoot, Failures) {
  auto never = [](double) { return -1.0; };
  EXPECT_THROW(swkb::find_increasing_root(never, 0.0, -1.0, 1.0, {1e-10, 200, 10}), swkb::numerical_error);
  auto positive = [](double x) { return x + 1.0; };
  EXPECT_THROW(swkb::find_increasing_root(positive, 0.0, 1.0, 1.0), swkb::numerical_error);
  EXPECT_THROW(swkb::find_increasing_root(positive, 1.0, -1.0, 0.0), swkb::domain_error);
}

}  // namespace
