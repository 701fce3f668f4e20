#pragma once

// Conformal <-> projective model conversions. In the Klein disk and in the
// gnomonic chart geodesics are straight lines, so every hull and half-plane
// computation in the library goes through this header.

#include <cmath>
#include <complex>

#include "geocvx/error.hpp"
#include "geocvx/hyperbolic.hpp"
#include "geocvx/numerics.hpp"
#include "geocvx/spherical.hpp"

namespace geocvx {

struct KleinPoint {
  Complex w;

  KleinPoint() = default;
  explicit KleinPoint(Complex value) : w(value) {
    if (!(std::abs(value) < 1.0)) throw DomainError("KleinPoint: |w| must be < 1");
  }
};

struct GnomonicPoint {
  Complex g;

  GnomonicPoint() = default;
  explicit GnomonicPoint(Complex value) : g(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw DomainError("GnomonicPoint: coordinates must be finite");
    }
  }
};

inline KleinPoint poincare_to_klein(HPoint z) {
  return KleinPoint(2.0 * z.z() / (1.0 + std::norm(z.z())));
}

inline HPoint klein_to_poincare(KleinPoint w) {
  const double n = std::abs(w.w);
  return HPoint(w.w / (1.0 + std::sqrt((1.0 - n) * (1.0 + n))));
}

/// Gnomonic chart of the open hemisphere |z| < 1.
inline GnomonicPoint stereo_to_gnomonic(const SPoint& z) {
  if (z.is_infinity()) throw DomainError("stereo_to_gnomonic: infinity is outside the hemisphere");
  const Complex v = z.value();
  const double n = std::abs(v);
  if (!(n < 1.0)) throw DomainError("stereo_to_gnomonic: |z| must be < 1 (open hemisphere about 0)");
  return GnomonicPoint(2.0 * v / ((1.0 - n) * (1.0 + n)));
}

inline SPoint gnomonic_to_stereo(GnomonicPoint g) {
  return SPoint(g.g / (1.0 + std::sqrt(1.0 + std::norm(g.g))));
}

// ---------------------------------------------------------------------------
// Ambient coordinates. Hyperbolic points lift to the hyperboloid
// X3^2 - X1^2 - X2^2 = 1, spherical points to the unit sphere. Geodesics are
// the intersections with planes through the origin, so a geodesic is carried
// by a plane normal N and the side of a point is the sign of X . N.

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline Vec3 lift_hyperboloid(HPoint p) {
  const Complex z = p.z();
  const double a = std::abs(z);
  const double den = (1.0 - a) * (1.0 + a);
  return {2.0 * z.real() / den, 2.0 * z.imag() / den, (1.0 + a * a) / den};
}

/// Inverse stereographic projection; 0 goes to the north pole, infinity to the south pole.
inline Vec3 lift_sphere(const SPoint& p) {
  if (p.is_infinity()) return {0.0, 0.0, -1.0};
  const Complex z = p.value();
  const double n2 = std::norm(z);
  const double den = 1.0 + n2;
  return {2.0 * z.real() / den, 2.0 * z.imag() / den, (1.0 - n2) / den};
}

/// Stereographic projection of a (not necessarily unit) nonzero vector's direction.
inline SPoint unlift_sphere(Vec3 x) {
  const double n = norm(x);
  if (n == 0.0) throw DomainError("unlift_sphere: zero vector");
  x = (1.0 / n) * x;
  if (x.z <= -1.0 + 1e-300 && x.x == 0.0 && x.y == 0.0) return SPoint::infinity();
  // (X1 + i X2) / (1 + X3); use the equivalent (1 - X3) / (X1 - i X2) form near the south pole.
  if (x.z >= 0.0) return SPoint(Complex(x.x, x.y) / (1.0 + x.z));
  const Complex conj_xy(x.x, -x.y);
  if (conj_xy == 0.0) return SPoint::infinity();
  return SPoint((1.0 - x.z) / conj_xy);
}

}  // namespace geocvx
