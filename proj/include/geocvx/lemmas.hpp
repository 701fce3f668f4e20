#pragma once

// Curvature certification of the two auxiliary functions behind the radial
// comparison:
//   f_hyp(x) = atanh(1 / (k1 coth(u1 x) + k2 coth(u2 x)))   concave on x > 0
//   f_sph(x) = atan (1 / (k1 cot (u1 x) + k2 cot (u2 x)))   convex on (0, x*]
// The sign of f'' is sampled with a central second difference on a grid.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geocvx/error.hpp"
#include "geocvx/numerics.hpp"

namespace geocvx {

enum class LemmaKind { hyp, sph };

inline std::string_view lemma_name(LemmaKind k) { return k == LemmaKind::hyp ? "hyp" : "sph"; }

struct LemmaParams {
  double k1 = 0.5, k2 = 0.5;
  double u1 = 1.0, u2 = 1.0;

  /// Positivity only; k1 + k2 >= 1 is the lemmas' hypothesis and is reported
  /// by satisfies_hypothesis() rather than enforced, so violating runs are possible.
  void validate() const {
    if (!(k1 > 0 && k2 > 0 && u1 > 0 && u2 > 0)) throw DomainError("LemmaParams: k1, k2, u1, u2 must be positive");
    if (!std::isfinite(k1 + k2 + u1 + u2)) throw DomainError("LemmaParams: parameters must be finite");
  }
  bool satisfies_hypothesis() const { return k1 + k2 >= 1.0; }
  /// Right end of the spherical domain, (pi/2) min(1/u1, 1/u2).
  double x_star() const { return kPi / 2.0 * std::min(1.0 / u1, 1.0 / u2); }
};

/// Hyperbolic auxiliary function. Evaluated as (1/2) log1p(2 / (D - 1)) with
/// D - 1 assembled from coth(y) - 1 = 2 / expm1(2y), so it stays accurate when
/// k1 + k2 = 1 and D approaches 1.
template <std::floating_point T = double>
T f_hyp(const LemmaParams& p, T x) {
  p.validate();
  if (!(x > T(0))) throw DomainError("f_hyp: x must be positive");
  const T k1 = p.k1, k2 = p.k2, u1 = p.u1, u2 = p.u2;
  const T dm1 = k1 * (T(2) / std::expm1(T(2) * u1 * x)) + k2 * (T(2) / std::expm1(T(2) * u2 * x)) + ((k1 + k2) - T(1));
  if (!(dm1 > T(0))) {
    throw DomainError("f_hyp: atanh argument leaves (0, 1) (k1 + k2 < 1 past the crossing?)");
  }
  return T(0.5) * std::log1p(T(2) / dm1);
}

/// Spherical auxiliary function on (0, x*]. At x* with u1 = u2 the
/// denominator vanishes and the value is the pi/2 limit.
template <std::floating_point T = double>
T f_sph(const LemmaParams& p, T x) {
  p.validate();
  if (!(x > T(0)) || x > T(p.x_star())) throw DomainError("f_sph: x must lie in (0, x*]");
  const T a = T(p.u1) * x, b = T(p.u2) * x;
  const T den = T(p.k1) * std::cos(a) / std::sin(a) + T(p.k2) * std::cos(b) / std::sin(b);
  return std::atan2(T(1), den);
}

struct CurvatureGrid {
  double lo = 1e-3;
  double hi = 20.0;
  std::size_t points = 512;

  /// Log-spaced abscissae lo .. hi inclusive.
  std::vector<double> abscissae() const {
    if (!(lo > 0 && hi > lo) || points < 2) throw DomainError("CurvatureGrid: need 0 < lo < hi and >= 2 points");
    std::vector<double> xs(points);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) {
      xs[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
  }
};

/// Default certification grid: [1e-3, 20] for hyp, [1e-3, x* - 2 fd_step] for sph.
inline CurvatureGrid default_grid(LemmaKind kind, const LemmaParams& p, const Tolerances& tol = default_tolerances()) {
  CurvatureGrid g;
  if (kind == LemmaKind::sph) g.hi = p.x_star() - 2.0 * tol.fd_step;
  return g;
}

struct CurvatureReport {
  LemmaKind kind = LemmaKind::hyp;
  LemmaParams params;
  CurvatureGrid grid;
  bool hypothesis = true;
  bool pass = true;
  /// Grid point with the least favourable second difference (max for hyp, min for sph).
  double worst_x = 0.0;
  double worst_value = 0.0;
  /// Grid points whose second difference has the wrong sign beyond fd_tol.
  std::size_t failures = 0;
};

/// Evaluates second_fd of f at every grid point, in long double so rounding
/// noise (~eps |f| / h^2) stays far below fd_tol even where f is large.
inline CurvatureReport certify_curvature(LemmaKind kind, const LemmaParams& p, const CurvatureGrid& grid,
                                         const Tolerances& tol = default_tolerances()) {
  p.validate();
  tol.validate();
  const long double h = tol.fd_step;
  if (!(grid.lo - 2.0 * tol.fd_step > 0.0)) throw DomainError("certify_curvature: grid starts within 2 fd steps of 0");
  if (kind == LemmaKind::sph && grid.hi > p.x_star() - 2.0 * tol.fd_step + 1e-15) {
    throw DomainError("certify_curvature: grid reaches within 2 fd steps of x*");
  }
  CurvatureReport rep;
  rep.kind = kind;
  rep.params = p;
  rep.grid = grid;
  rep.hypothesis = p.satisfies_hypothesis();
  rep.worst_value = kind == LemmaKind::hyp ? -std::numeric_limits<double>::infinity()
                                           : std::numeric_limits<double>::infinity();
  for (double x : grid.abscissae()) {
    double d2 = 0.0;
    try {
      d2 = kind == LemmaKind::hyp
               ? static_cast<double>(second_fd([&](long double y) { return f_hyp<long double>(p, y); },
                                               static_cast<long double>(x), h))
               : static_cast<double>(second_fd([&](long double y) { return f_sph<long double>(p, y); },
                                               static_cast<long double>(x), h));
    } catch (const Error& e) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "certify_curvature(" << lemma_name(kind) << "): evaluation failed at x = " << x << ": " << e.what();
      throw NonFiniteError(msg.str());
    }
    const bool worse = kind == LemmaKind::hyp ? d2 > rep.worst_value : d2 < rep.worst_value;
    if (worse) {
      rep.worst_value = d2;
      rep.worst_x = x;
    }
    const bool bad = kind == LemmaKind::hyp ? d2 > tol.fd_tol : d2 < -tol.fd_tol;
    if (bad) ++rep.failures;
  }
  rep.pass = rep.failures == 0;
  return rep;
}

inline CurvatureReport certify_curvature(LemmaKind kind, const LemmaParams& p,
                                         const Tolerances& tol = default_tolerances()) {
  return certify_curvature(kind, p, default_grid(kind, p, tol), tol);
}

/// Random parameters satisfying the hypothesis: u_i in [0.1, 2], k1 in
/// (0, 2), k2 in [max(1 - k1, 0) , 2) so that k1 + k2 >= 1. With `boundary`
/// set, k2 = 1 - k1 exactly (k1 in (0, 1)).
inline LemmaParams random_lemma_params(Rng& rng, bool boundary = false) {
  LemmaParams p;
  p.u1 = rng.uniform(0.1, 2.0);
  p.u2 = rng.uniform(0.1, 2.0);
  if (boundary) {
    // Dyadic k1 keeps 1 - k1 exact, so k1 + k2 == 1 holds without rounding.
    p.k1 = std::ldexp(std::round(std::ldexp(rng.uniform(0.01, 0.99), 40)), -40);
    p.k2 = 1.0 - p.k1;
  } else {
    p.k1 = rng.uniform(0.01, 2.0);
    p.k2 = rng.uniform(std::max(1.0 - p.k1, 0.01), 2.0);
  }
  return p;
}

}  // namespace geocvx
