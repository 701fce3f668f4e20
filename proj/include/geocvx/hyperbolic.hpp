#pragma once

// Poincare disk model: distance, isometries, radial dilations, geodesics and
// the radial comparison used to show that expansion preserves h-convexity.

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <variant>

#include "geocvx/error.hpp"
#include "geocvx/numerics.hpp"

namespace geocvx {

/// Point of the open unit disk. Points within 1e-9 of the boundary circle are
/// rejected; atanh of the modulus is ill-conditioned there.
class HPoint {
 public:
  static constexpr double kBoundaryGuard = 1e-9;

  HPoint() = default;
  HPoint(double re, double im = 0.0) : HPoint(Complex(re, im)) {}
  HPoint(Complex z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0 - kBoundaryGuard)) {
      throw DomainError("HPoint: |z| must be < 1 - 1e-9, got |z| = " + std::to_string(std::abs(z)));
    }
  }

  Complex z() const { return z_; }
  double abs() const { return std::abs(z_); }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  Complex z_{};
};

/// Hyperbolic geodesic: a diameter, or an arc of the circle |z - center| = radius
/// meeting the unit circle orthogonally (|center|^2 = 1 + radius^2).
struct HGeodesic {
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

/// Dilation about `c` with factor `k`; `s = 1/k` is kept alongside.
struct HDilation {
  HPoint c;
  double k = 1.0;
  double s = 1.0;

  HDilation() = default;
  HDilation(HPoint center, double factor) : c(center), k(factor), s(1.0 / factor) {
    if (!(factor > 0) || !std::isfinite(factor)) throw DomainError("HDilation: k must be positive and finite");
  }
  HDilation inverse() const { return HDilation(c, s); }
};

/// Configuration of the radial comparison: two image points tanh(gamma_i) e^{i theta_i},
/// a direction lambda strictly between them, and the inverse factor s.
struct RadialComparison {
  double gamma1 = 0, gamma2 = 0;
  double theta1 = 0, theta2 = 0, lambda = 0;
  double s = 1;

  void validate() const {
    if (!(gamma1 > 0 && gamma2 > 0)) throw DomainError("RadialComparison: gammas must be positive");
    if (!(0 <= theta1 && theta1 < lambda && lambda < theta2 && theta2 < kPi)) {
      throw DomainError("RadialComparison: need 0 <= theta1 < lambda < theta2 < pi");
    }
    if (!(s > 0)) throw DomainError("RadialComparison: s must be positive");
  }

  /// Fraction t with lambda = theta1 + t (theta2 - theta1).
  double t() const { return (lambda - theta1) / (theta2 - theta1); }

  RadialComparison with_s(double new_s) const {
    RadialComparison rc = *this;
    rc.s = new_s;
    return rc;
  }
};

// ---------------------------------------------------------------------------
// Metric and isometries

/// The isometry z -> (z + c) / (1 + conj(c) z), taking 0 to c.
inline HPoint h_translate(HPoint c, HPoint z) {
  return HPoint((z.z() + c.z()) / (1.0 + std::conj(c.z()) * z.z()));
}

/// Hyperbolic distance 2 atanh|tau_{-u}(v)|, evaluated in the equivalent
/// 2 asinh(|u - v| / sqrt((1 - |u|^2)(1 - |v|^2))) form.
inline double h_dist(HPoint u, HPoint v) {
  const double au = u.abs();
  const double av = v.abs();
  const double cu = (1.0 - au) * (1.0 + au);
  const double cv = (1.0 - av) * (1.0 + av);
  return 2.0 * std::asinh(std::abs(u.z() - v.z()) / std::sqrt(cu * cv));
}

// ---------------------------------------------------------------------------
// Dilations

/// Radial dilation about the origin: modulus r -> tanh(k atanh r), argument kept.
inline HPoint h_dilate_origin(double k, HPoint z) {
  if (!(k > 0)) throw DomainError("h_dilate_origin: k must be positive");
  const double r = z.abs();
  if (r == 0.0) return z;
  return HPoint(z.z() * (std::tanh(k * atanh_stable(r)) / r));
}

/// tau_c o delta_{0,k} o tau_c^{-1}.
inline HPoint h_dilate(const HDilation& d, HPoint z) {
  const HPoint minus_c(-d.c.z());
  return h_translate(d.c, h_dilate_origin(d.k, h_translate(minus_c, z)));
}

// ---------------------------------------------------------------------------
// Geodesics

/// True when 0, u and v lie on one Euclidean line (scale-aware test).
inline bool collinear_with_origin(Complex u, Complex v, double eq_abs) {
  return std::abs((std::conj(u) * v).imag()) < eq_abs * std::max(std::abs(u), std::abs(v));
}

namespace detail {

// Solves a . e^{i theta_j} = b_j (j = 1, 2) for the circle center a.
inline Complex solve_center(double b1, double th1, double b2, double th2) {
  const double det = std::sin(th2 - th1);
  return {(b1 * std::sin(th2) - b2 * std::sin(th1)) / det, (b2 * std::cos(th1) - b1 * std::cos(th2)) / det};
}

}  // namespace detail

/// Geodesic through two distinct points. Arc centers come from the linear
/// system a . e^{i theta_j} = (r_j^{-1} + r_j) / 2, so |a|^2 = 1 + R^2 holds by
/// construction.
inline HGeodesic h_geodesic_through(HPoint u, HPoint v, const Tolerances& tol = default_tolerances()) {
  if (u == v) throw DegenerateError("h_geodesic_through: points coincide");
  if (collinear_with_origin(u.z(), v.z(), tol.eq_abs)) {
    const Complex far = u.abs() >= v.abs() ? u.z() : v.z();
    return {HGeodesic::Diameter{far / std::abs(far)}};
  }
  const double r1 = u.abs(), r2 = v.abs();
  const Complex a = detail::solve_center((1.0 / r1 + r1) / 2.0, std::arg(u.z()), (1.0 / r2 + r2) / 2.0, std::arg(v.z()));
  return {HGeodesic::Arc{a, std::sqrt(std::norm(a) - 1.0)}};
}

/// Point at hyperbolic distance t * d(u, v) from u along [u, v].
inline HPoint h_segment_point(HPoint u, HPoint v, double t) {
  if (u == v) throw DegenerateError("h_segment_point: points coincide");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("h_segment_point: t must lie in [0, 1]");
  if (t == 0.0) return u;
  if (t == 1.0) return v;
  // tau_{-u}(v) may sit closer to the circle than any HPoint when u and v are
  // far apart, so only its direction is taken from it; the radial move uses
  // the distance from h_dist, which stays accurate.
  const Complex a = u.z();
  const Complex w = (v.z() - a) / (1.0 - std::conj(a) * v.z());
  const Complex wt = std::polar(std::tanh(t * h_dist(u, v) / 2.0), std::arg(w));
  return HPoint((wt + a) / (1.0 + std::conj(a) * wt));
}

/// Modulus of the in-disk intersection of the ray e^{i lambda} with an arc.
inline double h_ray_arc_intersect(const HGeodesic& g, double lambda, const Tolerances& tol = default_tolerances()) {
  if (!g.is_arc()) throw NoIntersectionError("h_ray_arc_intersect: geodesic is a diameter");
  const Complex a = g.arc().center;
  double alpha = a.real() * std::cos(lambda) + a.imag() * std::sin(lambda);
  if (alpha < 1.0 - tol.eq_abs) {
    throw NoIntersectionError("h_ray_arc_intersect: ray misses the arc (a . e^{i lambda} < 1)");
  }
  alpha = std::max(alpha, 1.0);
  // alpha - sqrt(alpha^2 - 1), written without cancellation.
  return 1.0 / (alpha + std::sqrt((alpha - 1.0) * (alpha + 1.0)));
}

// ---------------------------------------------------------------------------
// Radial comparison

/// atanh of the modulus of the point of [x1, x2] on the ray lambda, where
/// x_i = tanh(gamma_i s) e^{i theta_i} are the preimages.
inline double h_rho_closed_form(const RadialComparison& rc) {
  rc.validate();
  const double den = coth(2.0 * rc.gamma1 * rc.s) * std::sin(rc.theta2 - rc.lambda) +
                     coth(2.0 * rc.gamma2 * rc.s) * std::sin(rc.lambda - rc.theta1);
  return 0.5 * atanh_stable(std::sin(rc.theta2 - rc.theta1) / den);
}

/// atanh r' for the image point on [x1', x2'] along lambda (the s = 1 case).
inline double h_r_prime(const RadialComparison& rc) { return h_rho_closed_form(rc.with_s(1.0)); }

/// atanh r = s atanh r': the preimage of the image point, linear in s.
inline double h_r_closed_form(const RadialComparison& rc) {
  rc.validate();
  return rc.s * h_r_prime(rc);
}

/// Same quantity as h_rho_closed_form, computed geometrically: build the
/// preimages, the geodesic through them, and intersect with the ray.
inline double h_rho_geometric(const RadialComparison& rc, const Tolerances& tol = default_tolerances()) {
  rc.validate();
  const HPoint x1 = std::polar(std::tanh(rc.gamma1 * rc.s), rc.theta1);
  const HPoint x2 = std::polar(std::tanh(rc.gamma2 * rc.s), rc.theta2);
  const double rho = h_ray_arc_intersect(h_geodesic_through(x1, x2, tol), rc.lambda, tol);
  return atanh_stable(rho);
}

/// The comparison expressed in a frame where the first point sits on the
/// positive real axis; `rotation` is the angle removed.
struct RadialFrame {
  RadialComparison rc;
  double rotation = 0;
  bool swapped = false;
};

namespace detail {

template <class ToGamma>
RadialFrame radial_normal_form(Complex x1, Complex x2, double t, double s, ToGamma&& to_gamma) {
  if (x1 == 0.0 || x2 == 0.0) throw DegenerateError("radial normal form: points must differ from the origin");
  if (!(t > 0.0 && t < 1.0)) throw DomainError("radial normal form: t must lie in (0, 1)");
  double delta = wrap_angle(std::arg(x2) - std::arg(x1));
  RadialFrame frame;
  if (delta < 0) {
    std::swap(x1, x2);
    delta = -delta;
    t = 1.0 - t;
    frame.swapped = true;
  }
  if (!(delta > 0 && delta < kPi)) throw DegenerateError("radial normal form: points collinear with the origin");
  frame.rotation = std::arg(x1);
  frame.rc = RadialComparison{to_gamma(std::abs(x1)), to_gamma(std::abs(x2)), 0.0, delta, t * delta, s};
  return frame;
}

}  // namespace detail

/// Rotates an arbitrary pair of image points (and the fraction t of the angle
/// between them) into the normal form 0 = theta1 < lambda < theta2 < pi.
inline RadialFrame h_radial_normal_form(HPoint x1, HPoint x2, double t, double s) {
  auto frame = detail::radial_normal_form(x1.z(), x2.z(), t, s, [](double r) { return atanh_stable(r); });
  frame.rc.validate();
  return frame;
}

}  // namespace geocvx
