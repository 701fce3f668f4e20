#include <gtest/gtest.h>

#include <cmath>

#include "geocvx/hyperbolic.hpp"
#include "geocvx/numerics.hpp"

namespace {

using namespace geocvx;

constexpr double kEq = 1e-12;

HPoint random_hpoint(Rng& rng, double max_abs = 0.95) {
  return HPoint(std::polar(max_abs * std::sqrt(rng.uniform()), rng.uniform(0, 2 * kPi)));
}

TEST(HPoint, Domain) {
  EXPECT_NO_THROW(HPoint(0.999));
  EXPECT_THROW(HPoint(1.0), DomainError);
  EXPECT_THROW(HPoint(Complex(0.8, 0.8)), DomainError);
  EXPECT_THROW(HPoint(std::nan("")), DomainError);
}

TEST(HDist, SpecValues) {
  EXPECT_NEAR(h_dist(0.0, 0.5), 1.0986122886681097, 1e-15);
  EXPECT_EQ(h_dist(HPoint(0.3, 0.2), HPoint(0.3, 0.2)), 0.0);
  EXPECT_NEAR(h_dist(0.0, std::tanh(0.5)), 1.0, 1e-15);
}

TEST(HTranslate, SpecValues) {
  EXPECT_NEAR(std::abs(h_translate(0.5, 0.0).z() - 0.5), 0.0, kEq);
  EXPECT_EQ(h_translate(0.0, HPoint(0.3, -0.4)).z(), Complex(0.3, -0.4));
  EXPECT_NEAR(std::abs(h_translate(0.5, -0.5).z()), 0.0, kEq);
}

TEST(HTranslate, DerivativeAtOrigin) {
  const double eps = 1e-6;
  for (double c : {0.0, 0.3, -0.7}) {
    const double slope = (h_translate(c, eps).z().real() - c) / eps;
    EXPECT_NEAR(slope, 1 - c * c, 1e-6);
  }
}

TEST(HTranslate, IsometryProperty) {
  Rng rng(Seed{11});
  for (int i = 0; i < 2000; ++i) {
    const HPoint c = random_hpoint(rng, 0.9), u = random_hpoint(rng, 0.9), v = random_hpoint(rng, 0.9);
    const double d = h_dist(u, v);
    ASSERT_NEAR(h_dist(h_translate(c, u), h_translate(c, v)), d, 1e-11 * std::max(1.0, d));
  }
}

TEST(HDilate, OriginSpecValues) {
  EXPECT_EQ(h_dilate_origin(1.0, HPoint(0.3, 0.1)).z(), Complex(0.3, 0.1));
  EXPECT_NEAR(h_dilate_origin(2.0, 0.3).z().real(), 0.5504587155963303, 1e-15);
  EXPECT_EQ(h_dilate_origin(7.0, 0.0).z(), Complex(0.0));
  EXPECT_THROW(h_dilate_origin(0.0, 0.3), DomainError);
}

TEST(HDilate, CenteredSpecValues) {
  const HPoint c(0.2, -0.1);
  EXPECT_NEAR(std::abs(h_dilate(HDilation(c, 3.0), c).z() - c.z()), 0.0, kEq);
  // mpmath composition of the three maps.
  EXPECT_NEAR(h_dilate(HDilation(0.2, 2.0), 0.5).z().real(), 0.71428571428571429, 1e-14);
  EXPECT_THROW(HDilation(0.0, -1.0), DomainError);
}

TEST(HDilate, ScalesDistanceFromCenter) {
  Rng rng(Seed{12});
  for (int i = 0; i < 1000; ++i) {
    const HPoint c = random_hpoint(rng, 0.6), z = random_hpoint(rng, 0.6);
    const double k = rng.uniform(0.2, 2.5);
    const double d = h_dist(c, z);
    ASSERT_NEAR(h_dist(c, h_dilate(HDilation(c, k), z)), k * d, 1e-10 * std::max(1.0, k * d));
  }
}

TEST(HGeodesic, SpecArc) {
  const auto g = h_geodesic_through(0.5, Complex(0, 0.5));
  ASSERT_TRUE(g.is_arc());
  EXPECT_NEAR(g.arc().center.real(), 1.25, kEq);
  EXPECT_NEAR(g.arc().center.imag(), 1.25, kEq);
  EXPECT_NEAR(g.arc().radius, 1.4577379737113251, kEq);
}

TEST(HGeodesic, DiameterAndErrors) {
  const auto g = h_geodesic_through(0.3, -0.4);
  ASSERT_FALSE(g.is_arc());
  EXPECT_NEAR(std::abs(g.diameter().direction.imag()), 0.0, kEq);
  EXPECT_THROW(h_geodesic_through(0.3, 0.3), DegenerateError);
}

TEST(HGeodesic, ArcsPassThroughPointsOrthogonally) {
  Rng rng(Seed{13});
  for (int i = 0; i < 2000; ++i) {
    const HPoint u = random_hpoint(rng), v = random_hpoint(rng);
    const auto g = h_geodesic_through(u, v);
    if (!g.is_arc()) continue;
    const auto& a = g.arc();
    ASSERT_NEAR(std::norm(a.center), 1 + a.radius * a.radius, 1e-12 * std::norm(a.center));
    ASSERT_NEAR(std::abs(u.z() - a.center), a.radius, 1e-10 * a.radius);
    ASSERT_NEAR(std::abs(v.z() - a.center), a.radius, 1e-10 * a.radius);
  }
}

TEST(HSegment, Endpoints) {
  const HPoint u(0.1, 0.2), v(-0.5, 0.3);
  EXPECT_EQ(h_segment_point(u, v, 0.0), u);
  EXPECT_EQ(h_segment_point(u, v, 1.0), v);
  EXPECT_NEAR(std::abs(h_segment_point(-0.3, 0.3, 0.5).z()), 0.0, kEq);
  EXPECT_THROW(h_segment_point(u, u, 0.5), DegenerateError);
  EXPECT_THROW(h_segment_point(u, v, 1.5), DomainError);
}

TEST(HSegment, MidpointOnArcAndEquidistant) {
  const HPoint u(0.5), v(Complex(0, 0.5));
  const HPoint m = h_segment_point(u, v, 0.5);
  const auto a = h_geodesic_through(u, v).arc();
  EXPECT_NEAR(std::abs(m.z() - a.center), a.radius, 1e-12);
  EXPECT_NEAR(h_dist(u, m), h_dist(m, v), 1e-12);
}

TEST(HSegment, DistancesAreAdditive) {
  Rng rng(Seed{14});
  for (int i = 0; i < 1000; ++i) {
    const HPoint u = random_hpoint(rng, 0.99), v = random_hpoint(rng, 0.99);
    const double t = rng.uniform();
    const HPoint p = h_segment_point(u, v, t);
    const double d = h_dist(u, v);
    ASSERT_NEAR(h_dist(u, p), t * d, 1e-9 * std::max(1.0, d));
    ASSERT_NEAR(h_dist(p, v), (1 - t) * d, 1e-9 * std::max(1.0, d));
  }
}

TEST(HRayArc, SpecValue) {
  const HGeodesic g{HGeodesic::Arc{Complex(1.25, 1.25), std::sqrt(2.125)}};
  const double rho = h_ray_arc_intersect(g, kPi / 4);
  EXPECT_NEAR(rho, 0.31002897925504369, 1e-15);
  EXPECT_NEAR(std::abs(std::polar(rho, kPi / 4) - Complex(1.25, 1.25)), std::sqrt(2.125), 1e-12);
}

TEST(HRayArc, EndpointRayAndMisses) {
  const HPoint u(0.5), v(Complex(0, 0.5));
  const auto g = h_geodesic_through(u, v);
  EXPECT_NEAR(h_ray_arc_intersect(g, 0.0), 0.5, 1e-12);
  EXPECT_THROW(h_ray_arc_intersect(g, kPi), NoIntersectionError);
  EXPECT_THROW(h_ray_arc_intersect(h_geodesic_through(0.3, -0.4), 0.0), NoIntersectionError);
}

RadialComparison generic_rc(double s) { return {0.8, 1.3, 0.2, 1.9, 0.7, s}; }

TEST(HRadial, ClosedFormOracleValues) {
  EXPECT_NEAR(h_rho_closed_form(generic_rc(0.7)), 0.34470463773695514, 1e-14);
  EXPECT_NEAR(h_r_closed_form(generic_rc(0.7)), 0.27927626646438988, 1e-14);
}

TEST(HRadial, UnitScaleEquality) {
  const auto rc = generic_rc(1.0);
  EXPECT_NEAR(h_rho_closed_form(rc), h_r_prime(rc), kEq);
  EXPECT_NEAR(h_r_closed_form(rc), h_rho_closed_form(rc), kEq);
  EXPECT_NEAR(h_r_closed_form(generic_rc(0.5)), 0.5 * h_r_closed_form(rc), kEq);
}

TEST(HRadial, SmallScaleLimit) {
  EXPECT_LT(h_rho_closed_form(generic_rc(1e-9)), 1e-8);
  EXPECT_LT(h_r_closed_form(generic_rc(1e-9)), 1e-8);
}

TEST(HRadial, SymmetricConfiguration) {
  const double g = 0.6, th = 1.2, s = 0.8;
  const RadialComparison rc{g, g, 0.0, th, th / 2, s};
  // sin(th) / (2 coth(2 g s) sin(th / 2)) = tanh(2 g s) cos(th / 2).
  const double direct = 0.5 * atanh_stable(std::tanh(2 * g * s) * std::cos(th / 2));
  EXPECT_NEAR(h_rho_closed_form(rc), direct, 1e-13);
}

TEST(HRadial, GeometricMatchesClosedForm) {
  Rng rng(Seed{15});
  for (int i = 0; i < 2000; ++i) {
    const double t1 = rng.uniform(0, 1), t2 = rng.uniform(t1 + 0.1, 3.0);
    const RadialComparison rc{rng.uniform(0.05, 3), rng.uniform(0.05, 3), t1, t2, rng.uniform(t1 + 0.01, t2 - 0.01),
                              rng.uniform(0.01, 1)};
    if (!(rc.lambda > rc.theta1 && rc.lambda < rc.theta2)) continue;
    ASSERT_NEAR(h_rho_geometric(rc), h_rho_closed_form(rc), 1e-10);
    ASSERT_GE(h_rho_closed_form(rc) + 1e-12, h_r_closed_form(rc));
  }
}

TEST(HRadial, Validation) {
  EXPECT_THROW(h_rho_closed_form({0.8, 1.3, 0.2, 1.9, 0.1, 1.0}), DomainError);
  EXPECT_THROW(h_rho_closed_form({-0.8, 1.3, 0.2, 1.9, 0.7, 1.0}), DomainError);
  EXPECT_THROW(h_rho_closed_form({0.8, 1.3, 0.2, 3.5, 0.7, 1.0}), DomainError);
}

TEST(HRadial, NormalFormReproducesClosedForm) {
  const HPoint x1(std::polar(std::tanh(0.8), 2.0)), x2(std::polar(std::tanh(1.3), 0.5));
  const auto frame = h_radial_normal_form(x1, x2, 0.3, 1.0);
  EXPECT_TRUE(frame.swapped);
  EXPECT_NEAR(frame.rotation, 0.5, kEq);
  EXPECT_NEAR(frame.rc.gamma1, 1.3, 1e-12);
  EXPECT_NEAR(frame.rc.theta2, 1.5, 1e-12);
  EXPECT_NEAR(frame.rc.lambda, 0.7 * 1.5, 1e-12);
  EXPECT_THROW(h_radial_normal_form(0.3, -0.4, 0.5, 1.0), DegenerateError);
}

}  // namespace
