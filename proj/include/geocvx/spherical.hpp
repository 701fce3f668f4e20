#pragma once

// Extended-plane (stereographic) model of the unit sphere: distance,
// antipodes, rotations, radial dilations, great circles and the radial
// comparison used to show that contraction preserves s-convexity.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <variant>

#include "geocvx/error.hpp"
#include "geocvx/hyperbolic.hpp"
#include "geocvx/numerics.hpp"

namespace geocvx {

/// Point of the extended plane: a finite complex number or infinity.
class SPoint {
 public:
  SPoint() = default;
  SPoint(double re, double im = 0.0) : SPoint(Complex(re, im)) {}
  SPoint(Complex z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("SPoint: finite coordinates required (use SPoint::infinity())");
    }
  }

  static SPoint infinity() {
    SPoint p;
    p.inf_ = true;
    return p;
  }

  bool is_infinity() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// The finite value; throws DomainError at infinity.
  Complex value() const {
    if (inf_) throw DomainError("SPoint: point at infinity has no finite value");
    return z_;
  }

  friend bool operator==(const SPoint& a, const SPoint& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.z_ == b.z_);
  }

 private:
  Complex z_{};
  bool inf_ = false;
};

/// Great circle: a line through the origin, or the circle |z - center| = radius
/// with 1 + |center|^2 = radius^2.
struct SGeodesic {
  struct Diameter {
    Complex direction;
  };
  struct Arc {
    Complex center;
    double radius;
  };
  std::variant<Diameter, Arc> kind;

  bool is_arc() const { return std::holds_alternative<Arc>(kind); }
  const Arc& arc() const { return std::get<Arc>(kind); }
  const Diameter& diameter() const { return std::get<Diameter>(kind); }
};

struct SDilation {
  SPoint c;
  double k = 1.0;
  double s = 1.0;

  SDilation() = default;
  SDilation(SPoint center, double factor) : c(center), k(factor), s(1.0 / factor) {
    if (!c.is_finite()) throw DomainError("SDilation: center must be finite");
    if (!(factor > 0) || !std::isfinite(factor)) throw DomainError("SDilation: k must be positive and finite");
  }
  SDilation inverse() const { return SDilation(c, s); }
};

/// Spherical radial comparison; gamma_i = atan r_i' and s_star = (pi/4) min(1/gamma_i).
/// The theorem range is s in [1, s_star]; evaluation is allowed on (0, s_star].
struct SRadialComparison {
  double gamma1 = 0, gamma2 = 0;
  double theta1 = 0, theta2 = 0, lambda = 0;
  double s = 1;

  double s_star() const { return kPi / 4.0 * std::min(1.0 / gamma1, 1.0 / gamma2); }

  void validate() const {
    if (!(gamma1 > 0 && gamma2 > 0 && gamma1 <= kPi / 4 && gamma2 <= kPi / 4)) {
      throw DomainError("SRadialComparison: gammas must lie in (0, pi/4]");
    }
    if (!(0 <= theta1 && theta1 < lambda && lambda < theta2 && theta2 < kPi)) {
      throw DomainError("SRadialComparison: need 0 <= theta1 < lambda < theta2 < pi");
    }
    if (!(s > 0 && s <= s_star() * (1 + 1e-15))) throw DomainError("SRadialComparison: s must lie in (0, s_star]");
  }

  bool in_theorem_range() const { return s >= 1.0 && s <= s_star(); }
  double t() const { return (lambda - theta1) / (theta2 - theta1); }

  SRadialComparison with_s(double new_s) const {
    SRadialComparison rc = *this;
    rc.s = new_s;
    return rc;
  }
};

// ---------------------------------------------------------------------------
// Metric, antipodes, rotations

/// Spherical distance 2 atan|(z - w) / (1 + conj(w) z)|, in [0, pi].
inline double s_dist(const SPoint& u, const SPoint& v) {
  if (u.is_infinity() && v.is_infinity()) return 0.0;
  if (u.is_infinity()) return 2.0 * std::atan2(1.0, std::abs(v.value()));
  if (v.is_infinity()) return 2.0 * std::atan2(1.0, std::abs(u.value()));
  const Complex z = u.value(), w = v.value();
  return 2.0 * std::atan2(std::abs(z - w), std::abs(1.0 + std::conj(w) * z));
}

/// -1 / conj(u), exchanging 0 and infinity.
inline SPoint antipode(const SPoint& u) {
  if (u.is_infinity()) return SPoint(0.0);
  const Complex z = u.value();
  if (z == 0.0) return SPoint::infinity();
  return SPoint(-1.0 / std::conj(z));
}

/// The rotation z -> (z + c) / (1 - conj(c) z) taking 0 to c.
inline SPoint s_translate(const SPoint& c, const SPoint& z) {
  const Complex cv = c.value();
  if (z.is_infinity()) return cv == 0.0 ? SPoint::infinity() : SPoint(-1.0 / std::conj(cv));
  const Complex den = 1.0 - std::conj(cv) * z.value();
  if (den == 0.0) return SPoint::infinity();
  const Complex w = (z.value() + cv) / den;
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SPoint::infinity();
  return SPoint(w);
}

/// True iff s_dist(center, z) <= pi/2 (+ eq_abs).
inline bool in_hemisphere(const SPoint& center, const SPoint& z, const Tolerances& tol = default_tolerances()) {
  return s_dist(center, z) <= kPi / 2 + tol.eq_abs;
}

/// The Euclidean disk |z - c| < r is a hemisphere iff 1 + |c|^2 = r^2.
inline bool is_hemisphere_disk(Complex c, double r, const Tolerances& tol = default_tolerances()) {
  return std::abs(1.0 + std::norm(c) - r * r) <= tol.eq_abs * std::max(1.0, r * r);
}

// ---------------------------------------------------------------------------
// Dilations

/// Radial dilation about 0: modulus r -> tan(k atan r). Requires k * d(0, z) < pi.
inline SPoint s_dilate_origin(double k, const SPoint& z) {
  if (!(k > 0)) throw DomainError("s_dilate_origin: k must be positive");
  if (z.is_infinity()) throw RangeError("s_dilate_origin: infinity is the antipode of the center");
  const double r = std::abs(z.value());
  if (r == 0.0) return z;
  const double d = 2.0 * std::atan(r);
  if (!(k * d < kPi)) {
    throw RangeError("s_dilate_origin: k * d(0, z) = " + std::to_string(k * d) + " must be < pi");
  }
  return SPoint(z.value() * (std::tan(k * std::atan(r)) / r));
}

/// tau_c o delta_{0,k} o tau_c^{-1}; requires k * d(c, z) < pi.
inline SPoint s_dilate(const SDilation& d, const SPoint& z) {
  const double dist = s_dist(d.c, z);
  if (!(d.k * dist < kPi)) {
    throw RangeError("s_dilate: k * d(c, z) = " + std::to_string(d.k * dist) + " must be < pi");
  }
  const SPoint w = s_translate(SPoint(-d.c.value()), z);
  return s_translate(d.c, s_dilate_origin(d.k, w));
}

// ---------------------------------------------------------------------------
// Great circles

/// Pairs closer than this to distance pi are treated as antipodal.
inline constexpr double kAntipodalGuard = 1e-12;

inline bool antipodal(const SPoint& u, const SPoint& v) { return s_dist(u, v) >= kPi - kAntipodalGuard; }

/// Great circle through two distinct, non-antipodal points. Arc centers solve
/// a . e^{i theta_j} = (r_j - r_j^{-1}) / 2, so 1 + |a|^2 = R^2 holds by construction.
inline SGeodesic s_geodesic_through(const SPoint& u, const SPoint& v, const Tolerances& tol = default_tolerances()) {
  if (u == v) throw DegenerateError("s_geodesic_through: points coincide");
  if (antipodal(u, v)) throw AntipodalError("s_geodesic_through: antipodal points have no unique geodesic");
  const auto on_axis = [](const SPoint& p) { return p.is_infinity() || p.value() == 0.0; };
  if (on_axis(u) || on_axis(v)) {
    const Complex other = on_axis(u) ? v.value() : u.value();
    return {SGeodesic::Diameter{other / std::abs(other)}};
  }
  const Complex z1 = u.value(), z2 = v.value();
  if (collinear_with_origin(z1, z2, tol.eq_abs)) {
    const Complex far = std::abs(z1) >= std::abs(z2) ? z1 : z2;
    return {SGeodesic::Diameter{far / std::abs(far)}};
  }
  const double r1 = std::abs(z1), r2 = std::abs(z2);
  const Complex a = detail::solve_center((r1 - 1.0 / r1) / 2.0, std::arg(z1), (r2 - 1.0 / r2) / 2.0, std::arg(z2));
  return {SGeodesic::Arc{a, std::sqrt(1.0 + std::norm(a))}};
}

/// Point at distance t * d(u, v) from u along the shorter great-circle arc.
inline SPoint s_segment_point(const SPoint& u, const SPoint& v, double t) {
  if (u == v) throw DegenerateError("s_segment_point: points coincide");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("s_segment_point: t must lie in [0, 1]");
  if (antipodal(u, v)) throw AntipodalError("s_segment_point: antipodal points have no unique segment");
  if (t == 0.0) return u;
  if (t == 1.0) return v;
  if (u.is_infinity()) return s_segment_point(v, u, 1.0 - t);
  const SPoint w = s_translate(SPoint(-u.value()), v);
  const Complex wv = w.value();
  const double r = std::abs(wv);
  return s_translate(u, SPoint(wv * (std::tan(t * std::atan(r)) / r)));
}

/// Modulus of the in-disk intersection of the ray e^{i lambda} with a great circle.
inline double s_ray_arc_intersect(const SGeodesic& g, double lambda, const Tolerances& tol = default_tolerances()) {
  if (!g.is_arc()) throw NoIntersectionError("s_ray_arc_intersect: geodesic is a line through the origin");
  const Complex a = g.arc().center;
  double alpha = a.real() * std::cos(lambda) + a.imag() * std::sin(lambda);
  if (alpha > tol.eq_abs) {
    throw NoIntersectionError("s_ray_arc_intersect: a . e^{i lambda} > 0, intersection lies outside the unit disk");
  }
  alpha = std::min(alpha, 0.0);
  // sqrt(alpha^2 + 1) + alpha, written without cancellation.
  return 1.0 / (std::sqrt(alpha * alpha + 1.0) - alpha);
}

// ---------------------------------------------------------------------------
// Radial comparison

/// atan of the modulus of the point of [x1, x2] on the ray lambda, where
/// x_i = tan(gamma_i s) e^{i theta_i}.
inline double s_rho_closed_form(const SRadialComparison& rc) {
  rc.validate();
  const double den = cot(2.0 * rc.gamma1 * rc.s) * std::sin(rc.theta2 - rc.lambda) +
                     cot(2.0 * rc.gamma2 * rc.s) * std::sin(rc.lambda - rc.theta1);
  // den >= 0 on (0, s_star]; atan2 also covers den == 0 (rho = 1).
  return 0.5 * std::atan2(std::sin(rc.theta2 - rc.theta1), den);
}

inline double s_r_prime(const SRadialComparison& rc) {
  SRadialComparison unit = rc.with_s(1.0);
  return s_rho_closed_form(unit);
}

/// atan r = s atan r'.
inline double s_r_closed_form(const SRadialComparison& rc) {
  rc.validate();
  return rc.s * s_r_prime(rc);
}

inline double s_rho_geometric(const SRadialComparison& rc, const Tolerances& tol = default_tolerances()) {
  rc.validate();
  const SPoint x1(std::polar(std::tan(rc.gamma1 * rc.s), rc.theta1));
  const SPoint x2(std::polar(std::tan(rc.gamma2 * rc.s), rc.theta2));
  return std::atan(s_ray_arc_intersect(s_geodesic_through(x1, x2, tol), rc.lambda, tol));
}

struct SRadialFrame {
  SRadialComparison rc;
  double rotation = 0;
  bool swapped = false;
};

inline SRadialFrame s_radial_normal_form(const SPoint& x1, const SPoint& x2, double t, double s) {
  auto f = detail::radial_normal_form(x1.value(), x2.value(), t, s, [](double r) { return std::atan(r); });
  SRadialFrame frame{{f.rc.gamma1, f.rc.gamma2, f.rc.theta1, f.rc.theta2, f.rc.lambda, f.rc.s}, f.rotation, f.swapped};
  frame.rc.validate();
  return frame;
}

}  // namespace geocvx
