#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "geocvx/numerics.hpp"

namespace {

using namespace geocvx;

TEST(AtanhStable, SpecValues) {
  EXPECT_EQ(atanh_stable(0.0), 0.0);
  EXPECT_NEAR(atanh_stable(std::tanh(1.0)), 1.0, 1e-15);
  // mpmath: atanh(0.5)
  EXPECT_NEAR(atanh_stable(0.5), 0.54930614433405485, 2e-16);
}

TEST(AtanhStable, OddAndAccurateNearOne) {
  for (double x : {1e-12, 0.1, 0.7, 0.999, 1 - 1e-10}) {
    EXPECT_DOUBLE_EQ(atanh_stable(-x), -atanh_stable(x));
    EXPECT_NEAR(std::tanh(atanh_stable(x)), x, 1e-15);
  }
}

TEST(AtanhStable, RejectsOutsideOpenInterval) {
  EXPECT_THROW(atanh_stable(1.0), DomainError);
  EXPECT_THROW(atanh_stable(-1.5), DomainError);
  EXPECT_THROW(atanh_stable(std::nan("")), DomainError);
}

// Rounding noise is about eps x^2 / h^2, so double stays within 1e-6 only
// for moderate x; long double covers the rest.
TEST(SecondFd, Quadratic) {
  for (double x : {-1.5, 0.0, 0.5, 1.0}) {
    EXPECT_NEAR(second_fd([](double t) { return t * t; }, x, 1e-4), 2.0, 1e-6);
  }
  for (long double x : {-30.0L, 10.0L, 25.0L}) {
    EXPECT_NEAR(static_cast<double>(second_fd([](long double t) { return t * t; }, x, 1e-4L)), 2.0, 1e-6);
  }
}

TEST(SecondFd, ConstantAndSine) {
  EXPECT_NEAR(second_fd([](double) { return 4.2; }, 1.0, 1e-4), 0.0, 1e-9);
  EXPECT_NEAR(second_fd([](double t) { return std::sin(t); }, 0.0, 1e-4), 0.0, 1e-8);
}

TEST(SecondFd, Errors) {
  EXPECT_THROW(second_fd([](double t) { return t; }, 0.0, 0.0), DomainError);
  EXPECT_THROW(second_fd([](double t) { return std::log(t); }, 0.0, 1e-4), NonFiniteError);
}

TEST(Tolerances, Validation) {
  EXPECT_NO_THROW(Tolerances{}.validate());
  Tolerances t;
  t.margin = 0;
  EXPECT_THROW(t.validate(), DomainError);
  t = Tolerances{};
  t.fd_tol = 1e-9;  // below fd_step^2
  EXPECT_THROW(t.validate(), DomainError);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a(Seed{42}, 3), b(Seed{42}, 3), c(Seed{42}, 4), d(Seed{43}, 3);
  std::set<std::uint64_t> firsts;
  for (Rng* r : {&a, &c, &d}) firsts.insert((*r)());
  EXPECT_EQ(firsts.size(), 3u);
  b();
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(Rng, Ranges) {
  Rng r(Seed{1});
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const auto k = r.integer(3, 8);
    ASSERT_GE(k, 3);
    ASSERT_LE(k, 8);
  }
}

TEST(WrapAngle, Range) {
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_angle(0.25), 0.25, 0);
}

}  // namespace
