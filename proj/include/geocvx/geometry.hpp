#pragma once

// Geometry traits consumed by the region, hull and convexity templates.
// Each trait bundles the metric, the geodesic segment parametrization, the
// radial dilation and the ambient lift of one constant-curvature plane.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string_view>

#include "geocvx/hyperbolic.hpp"
#include "geocvx/models.hpp"
#include "geocvx/numerics.hpp"
#include "geocvx/spherical.hpp"

namespace geocvx {

enum class Model { euclidean, hyperbolic, spherical };

inline std::string_view model_name(Model m) {
  switch (m) {
    case Model::euclidean: return "euclidean";
    case Model::hyperbolic: return "hyperbolic";
    case Model::spherical: return "spherical";
  }
  return "?";
}

inline Model parse_model(std::string_view s) {
  if (s == "euclidean") return Model::euclidean;
  if (s == "hyperbolic") return Model::hyperbolic;
  if (s == "spherical") return Model::spherical;
  throw DomainError("unknown model '" + std::string(s) + "'");
}

/// Flat plane; mostly a control case for the curved models.
struct Euclidean {
  using Point = Complex;
  static constexpr Model model = Model::euclidean;

  static Point origin() { return {}; }
  static Complex coords(Point p) { return p; }
  static Point make(Complex z) { return z; }

  static double dist(Point a, Point b) { return std::abs(a - b); }
  static Point segment_point(Point a, Point b, double t) {
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    return a + t * (b - a);
  }
  static Point translate(Point c, Point z) { return z + c; }
  static Point untranslate(Point c, Point z) { return z - c; }
  static Point from_polar(double d, double theta) { return std::polar(d, theta); }
  static double radius_of(Point z) { return std::abs(z); }
  static Point dilate(Point c, double k, Point z) { return c + k * (z - c); }

  /// Projective lift (x, y, 1); lines are planes through the origin.
  static Vec3 lift(Point p) { return {p.real(), p.imag(), 1.0}; }
  /// Signed distance from lifted X to the line with plane normal N.
  static double signed_distance(Vec3 x, Vec3 n) { return dot(x, n) / std::hypot(n.x, n.y); }
  /// Plane normal of the line through A perpendicular to the line N.
  static Vec3 perpendicular(Vec3 a, Vec3 n) { return cross(a, Vec3{n.x, n.y, 0.0}); }
};

struct Hyperbolic {
  using Point = HPoint;
  static constexpr Model model = Model::hyperbolic;

  static Point origin() { return {}; }
  static Complex coords(Point p) { return p.z(); }
  static Point make(Complex z) { return HPoint(z); }

  static double dist(Point a, Point b) { return h_dist(a, b); }
  static Point segment_point(Point a, Point b, double t) { return h_segment_point(a, b, t); }
  static Point translate(Point c, Point z) { return h_translate(c, z); }
  static Point untranslate(Point c, Point z) { return h_translate(HPoint(-c.z()), z); }
  static Point from_polar(double d, double theta) { return HPoint(std::polar(std::tanh(d / 2.0), theta)); }
  static double radius_of(Point z) { return 2.0 * atanh_stable(z.abs()); }
  static Point dilate(Point c, double k, Point z) { return h_dilate(HDilation(c, k), z); }

  static Vec3 lift(Point p) { return lift_hyperboloid(p); }
  /// sinh(d) = <X, JN> / sqrt(<JN, JN>) with J = diag(1, 1, -1).
  static double signed_distance(Vec3 x, Vec3 n) {
    return std::asinh(dot(x, n) / std::sqrt(n.x * n.x + n.y * n.y - n.z * n.z));
  }
  static Vec3 perpendicular(Vec3 a, Vec3 n) { return cross(a, Vec3{n.x, n.y, -n.z}); }
};

struct Spherical {
  using Point = SPoint;
  static constexpr Model model = Model::spherical;

  static Point origin() { return {}; }
  static Complex coords(const Point& p) { return p.value(); }
  static Point make(Complex z) { return SPoint(z); }

  static double dist(const Point& a, const Point& b) { return s_dist(a, b); }
  static Point segment_point(const Point& a, const Point& b, double t) { return s_segment_point(a, b, t); }
  static Point translate(const Point& c, const Point& z) { return s_translate(c, z); }
  static Point untranslate(const Point& c, const Point& z) { return s_translate(SPoint(-c.value()), z); }
  static Point from_polar(double d, double theta) {
    if (d >= kPi) return SPoint::infinity();
    return SPoint(std::polar(std::tan(d / 2.0), theta));
  }
  static double radius_of(const Point& z) { return s_dist(SPoint(0.0), z); }
  static Point dilate(const Point& c, double k, const Point& z) { return s_dilate(SDilation(c, k), z); }

  static Vec3 lift(const Point& p) { return lift_sphere(p); }
  static double signed_distance(Vec3 x, Vec3 n) { return std::asin(std::clamp(dot(x, n) / norm(n), -1.0, 1.0)); }
  static Vec3 perpendicular(Vec3 a, Vec3 n) { return cross(a, n); }
};

template <class G>
concept Geometry = requires { typename G::Point; G::model; };

}  // namespace geocvx
