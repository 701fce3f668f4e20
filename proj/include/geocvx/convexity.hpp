#pragma once

// Geodesically convex sets and the randomized convexity checker.
//
// Generators are geodesic polygons (convex hulls of finitely many points).
// Dilated sets are never built explicitly: membership of x in delta(C) is
// decided by pulling x back through delta^{-1} and asking C. Every region
// answers a signed *escape* query (positive = outside, by at least that
// geodesic distance; zero on the boundary) that the checker uses as its margin.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geocvx/error.hpp"
#include "geocvx/geometry.hpp"
#include "geocvx/models.hpp"
#include "geocvx/numerics.hpp"

namespace geocvx {

// ---------------------------------------------------------------------------
// Radial maps (symmetric or axis-aligned asymmetric dilations)

/// Dilation about `center` scaling geodesic distance by k1 along the local
/// x axis and k2 along the local y axis. k1 == k2 is the ordinary dilation;
/// otherwise the Euclidean diagonal-matrix recipe is applied to geodesic
/// polar coordinates about the center.
template <class G>
struct Warp {
  using Point = typename G::Point;

  Point center{};
  double k1 = 1.0;
  double k2 = 1.0;

  Warp() = default;
  Warp(Point c, double k) : Warp(c, k, k) {}
  Warp(Point c, double kx, double ky) : center(c), k1(kx), k2(ky) {
    if (!(kx > 0 && ky > 0) || !std::isfinite(kx) || !std::isfinite(ky)) {
      throw DomainError("dilation factors must be positive and finite");
    }
  }

  bool symmetric() const { return k1 == k2; }
  Warp inverse_warp() const { return Warp(center, 1.0 / k1, 1.0 / k2); }

  Point forward(const Point& p) const { return apply(center, k1, k2, p); }
  Point inverse(const Point& p) const { return apply(center, 1.0 / k1, 1.0 / k2, p); }

  static Point apply(const Point& c, double kx, double ky, const Point& p) {
    if (kx == ky) return G::dilate(c, kx, p);
    const Point local = G::untranslate(c, p);
    if constexpr (G::model == Model::spherical) {
      if (local.is_infinity()) throw RangeError("asymmetric dilation: antipode of the center has no direction");
    }
    const Complex w = G::coords(local);
    if (w == 0.0) return p;
    const double d = G::radius_of(local);
    const double theta = std::arg(w);
    const double stretch = std::hypot(kx * std::cos(theta), ky * std::sin(theta));
    const double theta_out = std::atan2(ky * std::sin(theta), kx * std::cos(theta));
    const double d_out = d * stretch;
    if constexpr (G::model == Model::spherical) {
      if (!(d_out < kPi)) throw RangeError("asymmetric dilation: dilated distance reaches pi");
    }
    if constexpr (G::model == Model::euclidean) {
      return c + Complex(kx * w.real(), ky * w.imag());
    } else {
      return G::translate(c, G::from_polar(d_out, theta_out));
    }
  }
};

// ---------------------------------------------------------------------------
// Straightening charts

/// Projective chart in which the geodesics of G are straight lines.
template <class G>
struct Chart;

template <>
struct Chart<Euclidean> {
  Complex to(Complex p) const { return p; }
  Complex from(Complex c) const { return c; }
};

/// Klein disk.
template <>
struct Chart<Hyperbolic> {
  Complex to(HPoint p) const { return poincare_to_klein(p).w; }
  HPoint from(Complex w) const { return klein_to_poincare(KleinPoint(w)); }
};

/// Gnomonic chart of the open hemisphere about `center`. Points on or past
/// the equator are pulled in to radius 1 - kEquatorShrink first.
template <>
struct Chart<Spherical> {
  static constexpr double kEquatorShrink = 1e-9;

  SPoint center{};
  mutable bool perturbed = false;

  Complex to(const SPoint& p) const {
    SPoint local = s_translate(SPoint(-center.value()), p);
    if (local.is_infinity()) throw DomainError("gnomonic chart: point is antipodal to the chart center");
    Complex z = local.value();
    const double r = std::abs(z);
    if (r > 1.0 - kEquatorShrink) {
      z *= (1.0 - kEquatorShrink) / r;
      perturbed = true;
    }
    return stereo_to_gnomonic(SPoint(z)).g;
  }
  SPoint from(Complex g) const { return s_translate(center, gnomonic_to_stereo(GnomonicPoint(g))); }
};

namespace detail {

inline double cross2(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Direction maximizing min_i <v, X_i> over unit vectors, for unit X_i.
/// Returns the best direction and its min dot product; positive means the
/// points fit in an open hemisphere.
inline std::pair<Vec3, double> best_hemisphere(std::span<const Vec3> xs) {
  const auto score = [&](Vec3 v) {
    const double n = norm(v);
    if (!(n > 0)) return -std::numeric_limits<double>::infinity();
    v = (1.0 / n) * v;
    double m = std::numeric_limits<double>::infinity();
    for (const Vec3& x : xs) m = std::min(m, dot(v, x));
    return m;
  };
  Vec3 best{0, 0, 1};
  double best_score = -std::numeric_limits<double>::infinity();
  const auto consider = [&](Vec3 v) {
    const double s = score(v);
    if (s > best_score) {
      best_score = s;
      best = (1.0 / norm(v)) * v;
    }
  };
  Vec3 mean{};
  for (const Vec3& x : xs) mean = mean + x;
  consider(mean);
  const std::size_t n = xs.size();
  if (best_score > 0.05 && n > 12) return {best, best_score};
  // The optimum is pinned by at most three active points: a single point, the
  // bisector of two, or the circumcenter direction of three.
  for (std::size_t i = 0; i < n; ++i) {
    consider(xs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      consider(xs[i] + xs[j]);
      if (n > 40) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec3 c = cross(xs[j] - xs[i], xs[k] - xs[i]);
        consider(c);
        consider(-c);
      }
    }
  }
  return {best, best_score};
}

}  // namespace detail

/// Indices of the 2D convex hull of `pts`, counterclockwise, starting from the
/// lexicographically smallest point. Points within `eps` (cross product) of an
/// edge are dropped; exact duplicates keep their first occurrence.
inline std::vector<std::size_t> convex_hull_2d(std::span<const Complex> pts, double eps) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto lex = [&](std::size_t a, std::size_t b) {
    if (pts[a].real() != pts[b].real()) return pts[a].real() < pts[b].real();
    if (pts[a].imag() != pts[b].imag()) return pts[a].imag() < pts[b].imag();
    return a < b;
  };
  std::sort(idx.begin(), idx.end(), lex);
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() <= 2) return idx;

  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && detail::cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= eps) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= lower && detail::cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= eps) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

// ---------------------------------------------------------------------------
// Geodesic polygons

/// Geodesic convex hull of its vertices, stored counterclockwise together with
/// the ambient plane normals of its supporting half-planes (inside: X . N >= 0).
template <class G>
class GeodesicPolygon {
 public:
  using Point = typename G::Point;

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Chart<G>& chart() const { return chart_; }
  const std::vector<Complex>& chart_vertices() const { return chart_vertices_; }
  /// Diagnostics from construction (equator perturbation, ...).
  const std::vector<std::string>& notes() const { return notes_; }

  /// Max over supporting half-planes of the signed distance to the outside;
  /// for a single vertex, the distance to it.
  double escape(const Point& p) const {
    if (vertices_.size() == 1) return G::dist(vertices_[0], p);
    const Vec3 x = G::lift(p);
    double worst = -std::numeric_limits<double>::infinity();
    for (const Vec3& n : planes_) worst = std::max(worst, -G::signed_distance(x, n));
    return worst;
  }

  bool contains(const Point& p, const Tolerances& tol = default_tolerances()) const { return escape(p) <= tol.eq_abs; }

  /// Builds the polygon from hull vertices already in counterclockwise chart order.
  static GeodesicPolygon from_hull(std::vector<Point> vertices, Chart<G> chart, std::vector<Complex> chart_vertices,
                                   std::vector<std::string> notes = {}) {
    GeodesicPolygon poly;
    poly.vertices_ = std::move(vertices);
    poly.chart_ = std::move(chart);
    poly.chart_vertices_ = std::move(chart_vertices);
    poly.notes_ = std::move(notes);
    poly.build_planes();
    return poly;
  }

 private:
  void build_planes() {
    const std::size_t n = vertices_.size();
    std::vector<Vec3> xs;
    xs.reserve(n);
    for (const Point& v : vertices_) xs.push_back(G::lift(v));
    planes_.clear();
    if (n == 2) {
      const Vec3 line = cross(xs[0], xs[1]);
      Vec3 cap0 = G::perpendicular(xs[0], line);
      Vec3 cap1 = G::perpendicular(xs[1], line);
      if (dot(xs[1], cap0) < 0) cap0 = -cap0;
      if (dot(xs[0], cap1) < 0) cap1 = -cap1;
      planes_ = {line, -line, cap0, cap1};
    } else if (n >= 3) {
      for (std::size_t i = 0; i < n; ++i) planes_.push_back(cross(xs[i], xs[(i + 1) % n]));
    }
  }

  std::vector<Point> vertices_;
  std::vector<Vec3> planes_;
  Chart<G> chart_{};
  std::vector<Complex> chart_vertices_;
  std::vector<std::string> notes_;
};

/// Geodesic convex hull: straighten (Klein / gnomonic), take the Euclidean
/// hull, map back. Output vertices are a subset of the input, counterclockwise.
template <class G>
GeodesicPolygon<G> hull(std::span<const typename G::Point> points, const Tolerances& tol = default_tolerances()) {
  if (points.empty()) throw DomainError("hull: no points");
  Chart<G> chart{};
  std::vector<std::string> notes;
  if constexpr (G::model == Model::spherical) {
    std::vector<Vec3> xs;
    for (const auto& p : points) xs.push_back(G::lift(p));
    const auto [dir, score] = detail::best_hemisphere(xs);
    if (score < -tol.eq_abs) {
      throw DomainError("hull: points do not fit in one hemisphere (their s-convex hull is the whole sphere)");
    }
    if (score <= tol.eq_abs) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          if (antipodal(points[i], points[j])) {
            throw DomainError("hull: antipodal input points (their s-convex hull is the whole sphere)");
          }
        }
      }
    }
    chart.center = unlift_sphere(dir);
  }
  std::vector<Complex> flat;
  flat.reserve(points.size());
  for (const auto& p : points) flat.push_back(chart.to(p));
  if constexpr (G::model == Model::spherical) {
    if (chart.perturbed) notes.emplace_back("equator points shrunk inward by 1e-9 before hulling");
  }
  const auto order = convex_hull_2d(flat, tol.eq_abs);
  std::vector<typename G::Point> verts;
  std::vector<Complex> chart_verts;
  for (std::size_t i : order) {
    verts.push_back(points[i]);
    chart_verts.push_back(flat[i]);
  }
  return GeodesicPolygon<G>::from_hull(std::move(verts), chart, std::move(chart_verts), std::move(notes));
}

template <class G>
GeodesicPolygon<G> hull(std::initializer_list<typename G::Point> points, const Tolerances& tol = default_tolerances()) {
  const std::vector<typename G::Point> v(points);
  return hull<G>(std::span<const typename G::Point>(v), tol);
}

// ---------------------------------------------------------------------------
// Membership oracles

/// Plane normal of a hyperbolic geodesic; the origin side is X . N > 0.
inline Vec3 geodesic_normal(const HGeodesic& g) {
  if (g.is_arc()) return {-g.arc().center.real(), -g.arc().center.imag(), 1.0};
  const Complex e = g.diameter().direction;
  return {-e.imag(), e.real(), 0.0};
}

/// Plane normal of a great circle; for arcs the origin side is X . N < 0.
inline Vec3 geodesic_normal(const SGeodesic& g) {
  if (g.is_arc()) return {-g.arc().center.real(), -g.arc().center.imag(), -1.0};
  const Complex e = g.diameter().direction;
  return {-e.imag(), e.real(), 0.0};
}

/// Set given by a signed escape function (<= 0 inside) plus a center point
/// and bounding radius about that center, used for rejection sampling.
template <class G>
struct Oracle {
  using Point = typename G::Point;

  struct Disk {
    Point center;
    double radius;
  };
  struct HalfPlane {
    Vec3 normal;  // inside: X . normal >= 0
  };
  struct Custom {
    std::string name;
  };

  std::variant<Disk, HalfPlane, Custom> shape;
  std::function<double(const Point&)> escape;
  Point center{};
  double bound = 0.0;

  static Oracle disk(Point c, double radius) {
    Oracle o;
    o.shape = Disk{c, radius};
    o.escape = [c, radius](const Point& p) { return G::dist(c, p) - radius; };
    o.center = c;
    o.bound = radius;
    return o;
  }

  /// Closed half-plane bounded by the geodesic with ambient normal `n`, on the
  /// side containing `inner`; `bound` limits sampling around `inner`.
  static Oracle half_plane(Vec3 n, Point inner, double bound) {
    if (dot(G::lift(inner), n) < 0) n = -n;
    Oracle o;
    o.shape = HalfPlane{n};
    o.escape = [n](const Point& p) { return -G::signed_distance(G::lift(p), n); };
    o.center = inner;
    o.bound = bound;
    return o;
  }

  static Oracle custom(std::string name, std::function<double(const Point&)> f, Point c, double bound) {
    Oracle o;
    o.shape = Custom{std::move(name)};
    o.escape = std::move(f);
    o.center = c;
    o.bound = bound;
    return o;
  }
};

// ---------------------------------------------------------------------------
// Regions

template <class G>
class Region {
 public:
  using Point = typename G::Point;

  struct Dilated;
  struct Node;

  static Region polygon(GeodesicPolygon<G> p) { return Region(std::make_shared<Node>(Node{std::move(p)})); }
  static Region oracle(Oracle<G> o) { return Region(std::make_shared<Node>(Node{std::move(o)})); }
  static Region dilated(Region base, Warp<G> warp) {
    return Region(std::make_shared<Node>(Node{Dilated{std::move(base), warp}}));
  }

  bool is_polygon() const { return std::holds_alternative<GeodesicPolygon<G>>(node_->value); }
  bool is_oracle() const { return std::holds_alternative<Oracle<G>>(node_->value); }
  bool is_dilated() const { return std::holds_alternative<Dilated>(node_->value); }
  const GeodesicPolygon<G>& as_polygon() const { return std::get<GeodesicPolygon<G>>(node_->value); }
  const Oracle<G>& as_oracle() const { return std::get<Oracle<G>>(node_->value); }
  const Dilated& as_dilated() const { return std::get<Dilated>(node_->value); }

  /// Signed escape distance (<= 0 inside). For dilated regions it is measured
  /// in the base set after pulling `p` back.
  double escape(const Point& p) const {
    return std::visit(
        [&](const auto& v) -> double {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GeodesicPolygon<G>>) {
            return v.escape(p);
          } else if constexpr (std::is_same_v<T, Oracle<G>>) {
            return v.escape(p);
          } else {
            return v.escape(p);
          }
        },
        node_->value);
  }

  /// Closed membership (escape within eq_abs). Dilated spherical regions
  /// propagate RangeError when the pullback is undefined.
  bool contains(const Point& p, const Tolerances& tol = default_tolerances()) const {
    if (const auto* d = std::get_if<Dilated>(&node_->value)) return d->base.contains(d->warp.inverse(p), tol);
    return escape(p) <= tol.eq_abs;
  }

  /// A point known to belong to the region.
  Point anchor() const {
    return std::visit(
        [&](const auto& v) -> Point {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GeodesicPolygon<G>>) {
            return v.vertices().front();
          } else if constexpr (std::is_same_v<T, Oracle<G>>) {
            return v.center;
          } else {
            try {
              return v.warp.forward(v.base.anchor());
            } catch (const Error&) {
              return v.warp.center;
            }
          }
        },
        node_->value);
  }

  struct Dilated {
    Region base;
    Warp<G> warp;

    double escape(const Point& p) const {
      try {
        return base.escape(warp.inverse(p));
      } catch (const RangeError&) {
        return unreachable_escape(p);
      } catch (const DomainError&) {
        return unreachable_escape(p);
      }
    }

    // Lower bound on the escape of a point whose preimage is not representable
    // (past the antipode on the sphere, past the boundary guard in the disk).
    double unreachable_escape(const Point& p) const {
      const double d_pre = G::dist(warp.center, p) / std::max(warp.k1, warp.k2);
      double reach = kPi;
      if constexpr (G::model == Model::hyperbolic) {
        reach = G::dist(G::origin(), warp.center) + 2.0 * atanh_stable(1.0 - HPoint::kBoundaryGuard);
      } else if constexpr (G::model == Model::euclidean) {
        reach = std::numeric_limits<double>::infinity();
      }
      return std::max(0.0, d_pre - reach);
    }
  };

  struct Node {
    std::variant<GeodesicPolygon<G>, Oracle<G>, Dilated> value;
  };

  std::vector<std::string> warnings;

 private:
  explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// contains() as a free function.
template <class G>
bool contains(const Region<G>& r, const typename G::Point& p, const Tolerances& tol = default_tolerances()) {
  return r.contains(p, tol);
}

// ---------------------------------------------------------------------------
// Sampling

namespace detail {

inline constexpr int kMaxRejections = 20000;  // acceptance below 5e-5 is a failure

template <class G>
std::optional<typename G::Point> sample_polygon_interior(const GeodesicPolygon<G>& poly, Rng& rng) {
  const auto& cv = poly.chart_vertices();
  double x0 = cv[0].real(), x1 = x0, y0 = cv[0].imag(), y1 = y0;
  for (const Complex& c : cv) {
    x0 = std::min(x0, c.real());
    x1 = std::max(x1, c.real());
    y0 = std::min(y0, c.imag());
    y1 = std::max(y1, c.imag());
  }
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const Complex q(rng.uniform(x0, x1), rng.uniform(y0, y1));
    bool inside = true;
    for (std::size_t i = 0; i < cv.size() && inside; ++i) {
      inside = cross2(cv[i], cv[(i + 1) % cv.size()], q) >= 0;
    }
    if (!inside) continue;
    try {
      return poly.chart().from(q);
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

template <class G>
typename G::Point sample_polygon(const GeodesicPolygon<G>& poly, Rng& rng) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  if (n == 1) return v[0];
  if (n == 2) return G::segment_point(v[0], v[1], rng.uniform());
  const double mode = rng.uniform();
  if (mode < 0.2) return v[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1))];
  if (mode < 0.5) {
    const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
    return G::segment_point(v[i], v[(i + 1) % n], rng.uniform());
  }
  if (auto p = sample_polygon_interior(poly, rng)) return *p;
  throw SamplingError("polygon interior sampling failed (degenerate polygon?)");
}

}  // namespace detail

/// Draws a point of the region. Polygons mix vertices, edge points and chart
/// rejection samples; oracles rejection-sample geodesic polar coordinates
/// within the bounding radius; dilated regions push a base sample forward.
/// Sampled hyperbolic points stay this far (in |z|) inside the unit circle.
/// Closer in, rounding of the coordinates alone moves a point by more than
/// Tolerances::margin in hyperbolic distance, so segments between such points
/// would report spurious escapes. Any sub-family of pairs is a valid convexity
/// test, and segments never leave the Euclidean disk holding their endpoints.
inline constexpr double kHypSampleGuard = 1e-6;

template <class G>
typename G::Point sample_unguarded(const Region<G>& r, Rng& rng, const Tolerances& tol);

template <class G>
typename G::Point sample(const Region<G>& r, Rng& rng, const Tolerances& tol = default_tolerances()) {
  if constexpr (G::model == Model::hyperbolic) {
    for (int attempt = 0; attempt < detail::kMaxRejections; ++attempt) {
      const auto p = sample_unguarded(r, rng, tol);
      if (p.abs() <= 1.0 - kHypSampleGuard) return p;
    }
    throw SamplingError("no sampled point lies inside the conditioning guard |z| <= 1 - 1e-6");
  } else {
    return sample_unguarded(r, rng, tol);
  }
}

template <class G>
typename G::Point sample_unguarded(const Region<G>& r, Rng& rng, const Tolerances& tol) {
  if (r.is_polygon()) return detail::sample_polygon(r.as_polygon(), rng);
  if (r.is_oracle()) {
    const auto& o = r.as_oracle();
    for (int attempt = 0; attempt < detail::kMaxRejections; ++attempt) {
      try {
        const auto local = G::from_polar(o.bound * rng.uniform(), rng.uniform(0.0, 2 * kPi));
        const auto p = G::translate(o.center, local);
        if (o.escape(p) <= tol.eq_abs) return p;
      } catch (const DomainError&) {
      }
    }
    throw SamplingError("oracle rejection sampling acceptance rate below 5e-5");
  }
  const auto& d = r.as_dilated();
  for (int attempt = 0; attempt < detail::kMaxRejections; ++attempt) {
    try {
      return d.warp.forward(sample_unguarded(d.base, rng, tol));
    } catch (const RangeError&) {
    } catch (const DomainError&) {
    }
  }
  throw SamplingError("dilated region: base samples never map into the model");
}

// ---------------------------------------------------------------------------
// Dilation of regions

/// delta(r). Hypothesis checks (center inside r; for spherical contraction,
/// r inside the closed hemisphere about the center) are recorded as warnings.
template <class G>
Region<G> dilate_region(const Region<G>& r, const Warp<G>& warp, const Tolerances& tol = default_tolerances()) {
  Region<G> out = Region<G>::dilated(r, warp);
  out.warnings = r.warnings;
  bool center_inside = false;
  try {
    center_inside = r.contains(warp.center, tol);
  } catch (const Error&) {
  }
  if (!center_inside) out.warnings.emplace_back("dilation center is not contained in the region");
  if constexpr (G::model == Model::spherical) {
    if (warp.k1 <= 1.0 && warp.k2 <= 1.0) {
      if (r.is_polygon()) {
        for (const auto& v : r.as_polygon().vertices()) {
          if (!in_hemisphere(warp.center, v, tol)) {
            out.warnings.emplace_back("region is not contained in the closed hemisphere about the center");
            break;
          }
        }
      } else {
        out.warnings.emplace_back("hemisphere containment not verified for non-polygon region");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convexity checking

enum class Verdict { no_violation_found, violation };

inline std::string_view verdict_name(Verdict v) {
  return v == Verdict::violation ? "violation" : "no-violation-found";
}

template <class G>
struct Witness {
  using Point = typename G::Point;
  enum class Kind { segment, antipodal };

  Kind kind = Kind::segment;
  Point u{}, v{};
  double t = 0.5;
  Point point{};
  double margin = 0.0;
};

template <class G>
struct ConvexityReport {
  Verdict verdict = Verdict::no_violation_found;
  std::size_t trials = 0;
  std::size_t segments_checked = 0;
  std::size_t samples_per_segment = 0;
  Seed seed{};
  std::optional<std::size_t> violating_trial;
  std::optional<Witness<G>> witness;
  /// Largest escape seen over all checked segment points.
  double worst_escape = -std::numeric_limits<double>::infinity();
  std::vector<std::string> warnings;
};

/// Separation from exact antipodality below which a spherical pair is flagged
/// directly: the only s-convex set containing antipodal points is the sphere.
inline constexpr double kAntipodalFlag = 1e-6;

namespace detail {

// For an (almost) antipodal pair, every great semicircle joins them; probe the
// circle of points equidistant from both and return the worst one.
inline std::pair<SPoint, double> antipodal_probe(const Region<Spherical>& r, const SPoint& u) {
  const Vec3 x = lift_sphere(u);
  Vec3 e1 = std::abs(x.z) < 0.9 ? cross(x, Vec3{0, 0, 1}) : cross(x, Vec3{1, 0, 0});
  e1 = (1.0 / norm(e1)) * e1;
  const Vec3 e2 = cross(x, e1);
  SPoint best_point;
  double best = -std::numeric_limits<double>::infinity();
  constexpr int kProbes = 64;
  for (int i = 0; i < kProbes; ++i) {
    const double a = 2 * kPi * i / kProbes;
    const SPoint p = unlift_sphere(std::cos(a) * e1 + std::sin(a) * e2);
    const double e = r.escape(p);
    if (e > best) {
      best = e;
      best_point = p;
    }
  }
  return {best_point, best};
}

}  // namespace detail

/// Randomized test of geodesic convexity. Trial i draws (u, v) from the
/// stream (seed, i) and evaluates `samples_per_segment` evenly spaced interior
/// points of [u, v]; the first trial with a point escaping by more than
/// tol.margin is reported. Deterministic for a fixed seed.
template <class G>
ConvexityReport<G> check_convex(const Region<G>& r, std::size_t trials, std::size_t samples_per_segment, Seed seed,
                                const Tolerances& tol = default_tolerances()) {
  ConvexityReport<G> rep;
  rep.trials = trials;
  rep.samples_per_segment = samples_per_segment;
  rep.seed = seed;
  rep.warnings = r.warnings;
  bool near_antipodal_warned = false;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(seed, trial);
    const auto u = sample(r, rng, tol);
    const auto v = sample(r, rng, tol);
    if (u == v) continue;
    if constexpr (G::model == Model::spherical) {
      const double d = s_dist(u, v);
      if (d >= kPi - kAntipodalFlag) {
        const auto [p, e] = detail::antipodal_probe(r, u);
        rep.worst_escape = std::max(rep.worst_escape, e);
        ++rep.segments_checked;
        if (e > tol.margin) {
          rep.verdict = Verdict::violation;
          rep.violating_trial = trial;
          rep.witness = Witness<G>{Witness<G>::Kind::antipodal, u, v, 0.5, p, e};
          return rep;
        }
        continue;
      }
      if (d > kPi - 1e-9 && !near_antipodal_warned) {
        rep.warnings.emplace_back("near-antipodal pair sampled; segment is ill-conditioned");
        near_antipodal_warned = true;
      }
    }
    ++rep.segments_checked;
    double trial_worst = -std::numeric_limits<double>::infinity();
    std::optional<Witness<G>> trial_witness;
    for (std::size_t j = 1; j <= samples_per_segment; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(samples_per_segment + 1);
      const auto p = G::segment_point(u, v, t);
      const double e = r.escape(p);
      if (e > trial_worst) {
        trial_worst = e;
        trial_witness = Witness<G>{Witness<G>::Kind::segment, u, v, t, p, e};
      }
    }
    rep.worst_escape = std::max(rep.worst_escape, trial_worst);
    if (trial_worst > tol.margin) {
      rep.verdict = Verdict::violation;
      rep.violating_trial = trial;
      rep.witness = trial_witness;
      return rep;
    }
  }
  return rep;
}

/// Recomputes a witness point from (u, v, t) and its escape from the region.
template <class G>
std::pair<typename G::Point, double> recheck_witness(const Region<G>& r, const Witness<G>& w) {
  if (w.kind == Witness<G>::Kind::antipodal) return {w.point, r.escape(w.point)};
  const auto p = G::segment_point(w.u, w.v, w.t);
  return {p, r.escape(p)};
}

// ---------------------------------------------------------------------------
// Radial scans

/// Largest modulus along the ray e^{i lambda} still inside the region: a
/// coarse scan over geodesic distance from 0 followed by bisection to 1e-12
/// in modulus. Returns the supremum (1 in the disk, +inf on the sphere) when
/// the whole ray is inside. Assumes the region is star-shaped about 0.
template <class G>
double radial_farthest(const Region<G>& r, double lambda, std::size_t resolution) {
  if (resolution < 1) throw DomainError("radial_farthest: resolution must be positive");
  double d_max = 1e3;
  if constexpr (G::model == Model::hyperbolic) d_max = 2.0 * atanh_stable(1.0 - 2.0 * HPoint::kBoundaryGuard);
  if constexpr (G::model == Model::spherical) d_max = kPi - 1e-9;
  const auto modulus = [](double d) {
    if constexpr (G::model == Model::hyperbolic) return std::tanh(d / 2.0);
    if constexpr (G::model == Model::spherical) return std::tan(d / 2.0);
    return d;
  };
  const auto inside = [&](double rho) { return r.escape(G::make(std::polar(rho, lambda))) <= 0.0; };
  double last_in = 0.0;
  std::optional<double> first_out;
  for (std::size_t i = 1; i <= resolution; ++i) {
    const double rho = modulus(d_max * static_cast<double>(i) / static_cast<double>(resolution));
    if (inside(rho)) {
      last_in = rho;
    } else {
      first_out = rho;
      break;
    }
  }
  if (!first_out) {
    if constexpr (G::model == Model::hyperbolic) return 1.0;
    if constexpr (G::model == Model::spherical) return std::numeric_limits<double>::infinity();
    return last_in;
  }
  double lo = last_in, hi = *first_out;
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Random convex polygons

/// Hull of 3..8 points within geodesic radius `max_radius` of the origin,
/// with the origin added as a vertex when the hull misses it.
template <class G>
GeodesicPolygon<G> random_polygon(Rng& rng, double max_radius, const Tolerances& tol = default_tolerances()) {
  const auto n = rng.integer(3, 8);
  std::vector<typename G::Point> pts;
  for (std::int64_t i = 0; i < n; ++i) {
    pts.push_back(G::from_polar(rng.uniform(0.0, max_radius), rng.uniform(0.0, 2 * kPi)));
  }
  auto poly = hull<G>(std::span<const typename G::Point>(pts), tol);
  if (!poly.contains(G::origin(), tol)) {
    pts.push_back(G::origin());
    poly = hull<G>(std::span<const typename G::Point>(pts), tol);
  }
  return poly;
}

}  // namespace geocvx
