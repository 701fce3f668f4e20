#include <gtest/gtest.h>

#include <cmath>

#include "geocvx/geometry.hpp"
#include "geocvx/models.hpp"

namespace {

using namespace geocvx;

TEST(Klein, SpecValues) {
  EXPECT_EQ(poincare_to_klein(0.0).w, Complex(0.0));
  EXPECT_NEAR(poincare_to_klein(0.5).w.real(), 0.8, 1e-15);
  EXPECT_EQ(klein_to_poincare(KleinPoint(0.0)).z(), Complex(0.0));
  EXPECT_NEAR(klein_to_poincare(KleinPoint(0.8)).z().real(), 0.5, 1e-15);
  EXPECT_GT(klein_to_poincare(KleinPoint(1 - 1e-15)).abs(), 0.999);
  EXPECT_THROW(KleinPoint(1.0), DomainError);
}

TEST(Gnomonic, SpecValues) {
  EXPECT_EQ(stereo_to_gnomonic(0.0).g, Complex(0.0));
  EXPECT_NEAR(stereo_to_gnomonic(0.5).g.real(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(gnomonic_to_stereo(GnomonicPoint(4.0 / 3.0)).value().real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(gnomonic_to_stereo(GnomonicPoint(1e12)).value()), 1.0, 1e-11);
  EXPECT_THROW(stereo_to_gnomonic(1.0), DomainError);
  EXPECT_THROW(stereo_to_gnomonic(SPoint::infinity()), DomainError);
}

TEST(Conversions, RoundTrips) {
  Rng rng(Seed{31});
  for (int i = 0; i < 10000; ++i) {
    const Complex z = std::polar(0.999 * std::sqrt(rng.uniform()), rng.uniform(0, 2 * kPi));
    ASSERT_NEAR(std::abs(klein_to_poincare(poincare_to_klein(z)).z() - z), 0.0, 1e-12);
    ASSERT_NEAR(std::abs(gnomonic_to_stereo(stereo_to_gnomonic(SPoint(z))).value() - z), 0.0, 1e-12);
    const Complex w = z * 5.0;
    ASSERT_NEAR(std::abs(unlift_sphere(lift_sphere(w)).value() - w), 0.0, 1e-12 * std::max(1.0, std::norm(w)));
  }
}

// Images of geodesic segment points are collinear with the straightened endpoints.
TEST(Conversions, GeodesicsStraighten) {
  Rng rng(Seed{32});
  const auto defect = [](Complex a, Complex b, Complex p) {
    return std::abs((std::conj(b - a) * (p - a)).imag()) / std::max(1.0, std::norm(b - a));
  };
  for (int i = 0; i < 1000; ++i) {
    const HPoint u(std::polar(0.95 * rng.uniform(), rng.uniform(0, 2 * kPi)));
    const HPoint v(std::polar(0.95 * rng.uniform(), rng.uniform(0, 2 * kPi)));
    const SPoint su(std::polar(0.95 * rng.uniform(), rng.uniform(0, 2 * kPi)));
    const SPoint sv(std::polar(0.95 * rng.uniform(), rng.uniform(0, 2 * kPi)));
    for (int j = 1; j <= 9; ++j) {
      const double t = j / 10.0;
      ASSERT_LT(defect(poincare_to_klein(u).w, poincare_to_klein(v).w, poincare_to_klein(h_segment_point(u, v, t)).w),
                1e-10);
      ASSERT_LT(defect(stereo_to_gnomonic(su).g, stereo_to_gnomonic(sv).g,
                       stereo_to_gnomonic(s_segment_point(su, sv, t)).g),
                1e-10);
    }
  }
}

TEST(Lifts, HyperboloidAndSphere) {
  Rng rng(Seed{33});
  for (int i = 0; i < 1000; ++i) {
    const Complex z = std::polar(0.9 * rng.uniform(), rng.uniform(0, 2 * kPi));
    const Vec3 x = lift_hyperboloid(HPoint(z));
    ASSERT_NEAR(x.z * x.z - x.x * x.x - x.y * x.y, 1.0, 1e-10);
    ASSERT_NEAR(norm(lift_sphere(SPoint(z * 3.0))), 1.0, 1e-14);
  }
  EXPECT_TRUE(unlift_sphere(lift_sphere(SPoint::infinity())).is_infinity());
}

TEST(Traits, SignedDistanceMatchesMetric) {
  // Distance from a point to the real-axis geodesic equals its distance to the foot of the perpendicular.
  const Vec3 axis{0.0, 1.0, 0.0};
  const HPoint p(Complex(0.0, 0.4));
  EXPECT_NEAR(Hyperbolic::signed_distance(Hyperbolic::lift(p), axis), h_dist(0.0, p), 1e-14);
  const SPoint q(Complex(0.0, 0.4));
  EXPECT_NEAR(Spherical::signed_distance(Spherical::lift(q), axis), s_dist(0.0, q), 1e-14);
  EXPECT_NEAR(Euclidean::signed_distance(Euclidean::lift(Complex(3, -2)), axis), -2.0, 1e-15);
}

TEST(Traits, ModelNames) {
  for (Model m : {Model::euclidean, Model::hyperbolic, Model::spherical}) EXPECT_EQ(parse_model(model_name(m)), m);
  EXPECT_THROW(parse_model("elliptic"), DomainError);
}

}  // namespace
