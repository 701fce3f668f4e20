#pragma once

// Executable checks of the main results: randomized theorem suites, the four
// counterexamples showing the hypotheses are needed, internal consistency of
// the radial comparison, lemma certification over random parameters, and an
// explorer for asymmetric dilations.
//
// Every suite returns a SuiteReport whose JSON form is byte-deterministic for
// a fixed seed apart from the optional timestamp.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geocvx/convexity.hpp"
#include "geocvx/geometry.hpp"
#include "geocvx/hyperbolic.hpp"
#include "geocvx/io.hpp"
#include "geocvx/lemmas.hpp"
#include "geocvx/models.hpp"
#include "geocvx/numerics.hpp"
#include "geocvx/spherical.hpp"

namespace geocvx {

inline constexpr std::string_view kVersion = "0.1.0";

struct SuiteReport {
  std::string suite;
  Seed seed{};
  Json params = Json::object();
  Json runs = Json::array();
  std::string verdict;
  bool expectation_met = false;
  std::optional<double> worst_margin;

  /// {suite, seed, params, runs, verdict, expectation_met, worst_margin, timestamp, version}.
  Json to_json(const std::optional<std::string>& timestamp = std::nullopt) const {
    Json j;
    j["suite"] = suite;
    j["seed"] = seed.value;
    j["params"] = params;
    j["runs"] = runs;
    j["verdict"] = verdict;
    j["expectation_met"] = expectation_met;
    j["worst_margin"] = worst_margin ? Json(*worst_margin) : Json(nullptr);
    j["timestamp"] = timestamp ? Json(*timestamp) : Json(nullptr);
    j["version"] = kVersion;
    return j;
  }
};

inline Json tolerances_to_json(const Tolerances& tol) {
  return {{"eq_abs", tol.eq_abs}, {"margin", tol.margin}, {"fd_step", tol.fd_step}, {"fd_tol", tol.fd_tol}};
}

template <class G>
Json witness_to_json(const Witness<G>& w) {
  return {{"kind", w.kind == Witness<G>::Kind::antipodal ? "antipodal" : "segment"},
          {"u", point_to_json(w.u)},
          {"v", point_to_json(w.v)},
          {"t", w.t},
          {"point", point_to_json(w.point)},
          {"margin", w.margin}};
}

inline Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <class G>
Json convexity_to_json(const ConvexityReport<G>& r) {
  Json j{{"verdict", verdict_name(r.verdict)},
         {"trials", r.trials},
         {"segments_checked", r.segments_checked},
         {"samples_per_segment", r.samples_per_segment},
         {"seed", r.seed.value},
         {"worst_escape", finite_or_null(r.worst_escape)},
         {"warnings", r.warnings}};
  j["violating_trial"] = r.violating_trial ? Json(*r.violating_trial) : Json(nullptr);
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Asymmetric dilation

/// Axis-aligned asymmetric dilation about a center. Off the Euclidean plane the
/// Euclidean recipe is applied to geodesic polar coordinates (the
/// "geodesic-polar" interpretation).
template <class G>
using AsymmetricDilation = Warp<G>;

inline constexpr std::string_view kAsymInterpretation = "geodesic-polar";

template <class G>
typename G::Point asym_dilate(const AsymmetricDilation<G>& a, const typename G::Point& z) {
  return a.forward(z);
}

// ---------------------------------------------------------------------------
// Theorem suites

struct TheoremSuiteConfig {
  std::size_t polygons = 200;
  std::size_t trials = 1000;
  std::size_t samples_per_segment = 16;
  double k_lo = 1.0;
  double k_hi = 5.0;
  Seed seed{};
  Tolerances tol{};
};

inline TheoremSuiteConfig theorem1_defaults() { return {}; }

inline TheoremSuiteConfig theorem2_defaults() {
  TheoremSuiteConfig c;
  c.k_lo = 0.2;
  c.k_hi = 1.0;
  return c;
}

/// Largest geodesic radius of the random generator polygons.
inline constexpr double kHypPolygonRadius = 2.5;
inline constexpr double kSphPolygonRadius = kPi / 2 - 0.05;

namespace detail {

// Random h-convex polygon with a random center drawn from the polygon itself.
inline std::pair<GeodesicPolygon<Hyperbolic>, HPoint> theorem1_instance(Rng& rng, const Tolerances& tol) {
  auto poly = random_polygon<Hyperbolic>(rng, kHypPolygonRadius, tol);
  const HPoint c = sample(Region<Hyperbolic>::polygon(poly), rng, tol);
  return {std::move(poly), c};
}

// Random s-convex polygon moved by a random rotation of the sphere, with a
// center whose closed hemisphere contains it: a random point of the polygon
// when that works, otherwise the image of 0.
inline std::pair<GeodesicPolygon<Spherical>, SPoint> theorem2_instance(Rng& rng, const Tolerances& tol) {
  const auto base = random_polygon<Spherical>(rng, kSphPolygonRadius, tol);
  const SPoint shift = Spherical::from_polar(rng.uniform(0.0, 0.95 * kPi), rng.uniform(0.0, 2 * kPi));
  std::vector<SPoint> moved;
  for (const auto& v : base.vertices()) moved.push_back(s_translate(shift, v));
  auto poly = hull<Spherical>(std::span<const SPoint>(moved), tol);
  SPoint c = sample(Region<Spherical>::polygon(poly), rng, tol);
  for (const auto& v : poly.vertices()) {
    if (!in_hemisphere(c, v, tol)) {
      c = shift;
      break;
    }
  }
  return {std::move(poly), c};
}

template <class G>
Json polygon_vertices_json(const GeodesicPolygon<G>& p) {
  Json arr = Json::array();
  for (const auto& v : p.vertices()) arr.push_back(point_to_json(v));
  return arr;
}

template <class G, class Make>
SuiteReport run_dilation_suite(std::string suite, const TheoremSuiteConfig& cfg, Make&& make_instance,
                               bool asymmetric = false, double k2_lo = 0, double k2_hi = 0) {
  cfg.tol.validate();
  SuiteReport rep;
  rep.suite = std::move(suite);
  rep.seed = cfg.seed;
  rep.params = {{"model", model_name(G::model)},
                {"polygons", cfg.polygons},
                {"trials", cfg.trials},
                {"samples_per_segment", cfg.samples_per_segment},
                {"k_range", {cfg.k_lo, cfg.k_hi}},
                {"tolerances", tolerances_to_json(cfg.tol)}};
  if (asymmetric) {
    rep.params["k2_range"] = {k2_lo, k2_hi};
    rep.params["interpretation"] = kAsymInterpretation;
  }
  std::size_t violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cfg.polygons; ++i) {
    Rng rng(cfg.seed, i);
    auto [poly, center] = make_instance(rng, cfg.tol);
    const double k1 = rng.uniform(cfg.k_lo, cfg.k_hi);
    const double k2 = asymmetric ? rng.uniform(k2_lo, k2_hi) : k1;
    const Seed run_seed = rng.derive(i);
    const auto region = dilate_region(Region<G>::polygon(poly), Warp<G>(center, k1, k2), cfg.tol);
    const auto check = check_convex(region, cfg.trials, cfg.samples_per_segment, run_seed, cfg.tol);
    worst = std::max(worst, check.worst_escape);
    if (check.verdict == Verdict::violation) ++violations;
    Json run{{"index", i},
             {"seed", run_seed.value},
             {"center", point_to_json(center)},
             {"vertices", polygon_vertices_json(poly)},
             {"check", convexity_to_json(check)}};
    if (asymmetric) {
      run["k1"] = k1;
      run["k2"] = k2;
    } else {
      run["k"] = k1;
    }
    rep.runs.push_back(std::move(run));
  }
  rep.params["violations"] = violations;
  rep.verdict = violations == 0 ? "no-violation-found" : "violation";
  rep.expectation_met = violations == 0;
  if (std::isfinite(worst)) rep.worst_margin = worst;
  return rep;
}

}  // namespace detail

/// Expansion of random h-convex polygons about random interior centers; the
/// expectation is zero violations (k >= 1). Other k ranges run the same code
/// as a hypothesis-violation probe.
inline SuiteReport run_theorem1_suite(const TheoremSuiteConfig& cfg) {
  return detail::run_dilation_suite<Hyperbolic>("theorem1", cfg, detail::theorem1_instance);
}

/// Contraction of random hemisphere-contained s-convex polygons; zero
/// violations expected for k in (0, 1].
inline SuiteReport run_theorem2_suite(const TheoremSuiteConfig& cfg) {
  return detail::run_dilation_suite<Spherical>("theorem2", cfg, detail::theorem2_instance);
}

// ---------------------------------------------------------------------------
// Counterexamples

enum class CounterexampleId { h_contract_halfplane, dilate_outside_point, s_expand_long_geodesic, s_contract_beyond_hemisphere };

inline constexpr CounterexampleId kAllCounterexamples[] = {
    CounterexampleId::h_contract_halfplane, CounterexampleId::dilate_outside_point,
    CounterexampleId::s_expand_long_geodesic, CounterexampleId::s_contract_beyond_hemisphere};

inline std::string_view counterexample_name(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::h_contract_halfplane: return "h-contract-halfplane";
    case CounterexampleId::dilate_outside_point: return "dilate-outside-point";
    case CounterexampleId::s_expand_long_geodesic: return "s-expand-long-geodesic";
    case CounterexampleId::s_contract_beyond_hemisphere: return "s-contract-beyond-hemisphere";
  }
  return "?";
}

inline CounterexampleId parse_counterexample(std::string_view s) {
  for (auto id : kAllCounterexamples) {
    if (counterexample_name(id) == s) return id;
  }
  throw DomainError("unknown counterexample case '" + std::string(s) + "'");
}

struct CounterexampleOptions {
  std::size_t trials = 2000;
  std::size_t samples_per_segment = 32;
  /// dilate-outside-point only: put the center on the segment (control run).
  bool center_on_segment = false;
  Tolerances tol{};
};

struct CounterexampleReport {
  CounterexampleId id{};
  bool expect_violation = true;
  Verdict verdict = Verdict::no_violation_found;
  /// Best margin over the constructed witness and the randomized checker.
  double margin = -std::numeric_limits<double>::infinity();
  Json witness = nullptr;
  Json construction = Json::object();
  Json checker = Json::object();
  Json variants = Json::array();
  std::vector<std::string> warnings;

  bool expectation_met() const { return (verdict == Verdict::violation) == expect_violation; }

  Json to_json() const {
    return {{"case", counterexample_name(id)},
            {"expect_violation", expect_violation},
            {"verdict", verdict_name(verdict)},
            {"margin", finite_or_null(margin)},
            {"witness", witness},
            {"construction", construction},
            {"checker", checker},
            {"variants", variants},
            {"warnings", warnings}};
  }
};

namespace detail {

// Densest-search witness on the segment [u, v].
template <class G>
Witness<G> best_on_segment(const Region<G>& r, const typename G::Point& u, const typename G::Point& v,
                           std::size_t steps = 2000) {
  Witness<G> w{Witness<G>::Kind::segment, u, v, 0.5, G::segment_point(u, v, 0.5), -std::numeric_limits<double>::infinity()};
  for (std::size_t j = 1; j < steps; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(steps);
    const auto p = G::segment_point(u, v, t);
    const double e = r.escape(p);
    if (e > w.margin) w = Witness<G>{Witness<G>::Kind::segment, u, v, t, p, e};
  }
  return w;
}

// Sine of the angle at a between the chart chords a->b and a->c.
inline double collinearity_defect(Complex a, Complex b, Complex c) {
  return std::abs(cross2(a, b, c)) / (std::abs(b - a) * std::abs(c - a));
}

template <class G>
void merge_result(CounterexampleReport& rep, const Region<G>& region, const std::optional<Witness<G>>& constructed,
                  std::size_t trials, std::size_t samples, Seed seed, const Tolerances& tol) {
  const auto check = check_convex(region, trials, samples, seed, tol);
  rep.checker = convexity_to_json(check);
  for (const auto& w : check.warnings) rep.warnings.push_back(w);
  std::optional<Witness<G>> best = check.witness;
  bool from_construction = false;
  if (constructed && (!best || constructed->margin > best->margin)) {
    best = constructed;
    from_construction = true;
  }
  if (best && best->margin > rep.margin) {
    rep.margin = best->margin;
    rep.witness = witness_to_json(*best);
    rep.witness["model"] = model_name(G::model);
    rep.witness["source"] = from_construction ? "construction" : "checker";
  }
  if (rep.margin > tol.margin) rep.verdict = Verdict::violation;
}

inline CounterexampleReport case_halfplane(Seed seed, const CounterexampleOptions& opt) {
  CounterexampleReport rep;
  rep.id = CounterexampleId::h_contract_halfplane;
  const Complex arc_center(1.25, 0.0);
  const double arc_radius = 0.75, k = 0.5;
  const HGeodesic boundary{HGeodesic::Arc{arc_center, arc_radius}};
  const auto H = Region<Hyperbolic>::oracle(Oracle<Hyperbolic>::half_plane(geodesic_normal(boundary), HPoint(0.0), 6.0));
  const auto image = dilate_region(H, Warp<Hyperbolic>(HPoint(0.0), k), opt.tol);
  // Pairs on the boundary geodesic pushed towards its ideal endpoints
  // 0.8 +- 0.6i; the segment joining their images hugs the original geodesic.
  const double beta_max = std::atan2(0.8, 0.6);
  std::optional<Witness<Hyperbolic>> best;
  for (double eps : {0.1, 0.03, 0.01, 0.003, 0.001}) {
    const Complex p = arc_center + std::polar(arc_radius, kPi - beta_max * (1.0 - eps));
    const HPoint u = h_dilate(HDilation(HPoint(0.0), k), HPoint(p));
    const HPoint v = h_dilate(HDilation(HPoint(0.0), k), HPoint(std::conj(p)));
    const auto w = best_on_segment(image, u, v);
    if (!best || w.margin > best->margin) best = w;
  }
  rep.construction = {{"model", "hyperbolic"},
                      {"set", "half-plane bounded by the geodesic |z - 1.25| = 0.75, containing 0"},
                      {"boundary_center", point_to_json(arc_center)},
                      {"boundary_radius", arc_radius},
                      {"dilation_center", point_to_json(Complex(0.0))},
                      {"k", k}};
  merge_result(rep, image, best, opt.trials, opt.samples_per_segment, seed, opt.tol);
  return rep;
}

template <class G>
Json outside_point_variant(CounterexampleReport& rep, const typename G::Point& u, const typename G::Point& v,
                           const typename G::Point& center, double k, Seed seed, const CounterexampleOptions& opt) {
  const auto seg = hull<G>({u, v}, opt.tol);
  const auto image = dilate_region(Region<G>::polygon(seg), Warp<G>(center, k), opt.tol);
  const Warp<G> warp(center, k);
  const auto up = warp.forward(u), vp = warp.forward(v), mp = warp.forward(G::segment_point(u, v, 0.5));
  const auto w = best_on_segment(image, up, vp);
  double defect = 0.0;
  if constexpr (G::model == Model::hyperbolic) {
    const Chart<Hyperbolic> chart{};
    defect = collinearity_defect(chart.to(up), chart.to(mp), chart.to(vp));
  } else {
    const Chart<Spherical> chart{};
    defect = collinearity_defect(chart.to(up), chart.to(mp), chart.to(vp));
  }
  const std::size_t before = rep.warnings.size();
  merge_result(rep, image, std::optional<Witness<G>>(w), opt.trials, opt.samples_per_segment, seed, opt.tol);
  Json variant{{"model", model_name(G::model)},
               {"center", point_to_json(center)},
               {"k", k},
               {"image_endpoints", {point_to_json(up), point_to_json(vp)}},
               {"image_midpoint", point_to_json(mp)},
               {"collinearity_defect", defect},
               {"constructed_margin", w.margin},
               {"checker", rep.checker}};
  rep.warnings.resize(before);
  for (const auto& s : image.warnings) rep.warnings.push_back(std::string(model_name(G::model)) + ": " + s);
  return variant;
}

inline CounterexampleReport case_outside_point(Seed seed, const CounterexampleOptions& opt) {
  CounterexampleReport rep;
  rep.id = CounterexampleId::dilate_outside_point;
  rep.expect_violation = !opt.center_on_segment;
  const Complex u(-0.4, 0.3), v(0.4, 0.3);
  const double k = 2.0;
  const HPoint hc = opt.center_on_segment ? h_segment_point(u, v, 0.5) : HPoint(0.0);
  const SPoint sc = opt.center_on_segment ? s_segment_point(SPoint(u), SPoint(v), 0.5) : SPoint(0.0);
  rep.construction = {{"set", "geodesic segment [u, v]"},
                      {"u", point_to_json(u)},
                      {"v", point_to_json(v)},
                      {"k", k},
                      {"center_on_segment", opt.center_on_segment}};
  rep.variants.push_back(outside_point_variant<Hyperbolic>(rep, HPoint(u), HPoint(v), hc, k, seed, opt));
  const Json h_checker = rep.checker;
  rep.variants.push_back(outside_point_variant<Spherical>(rep, SPoint(u), SPoint(v), sc, k, seed, opt));
  rep.checker = {{"hyperbolic", h_checker}, {"spherical", rep.checker}};
  return rep;
}

inline CounterexampleReport case_long_geodesic(Seed seed, const CounterexampleOptions& opt) {
  CounterexampleReport rep;
  rep.id = CounterexampleId::s_expand_long_geodesic;
  const double k = 1.05;
  const double end = std::tan(0.98 * kPi / 4.0);
  const auto seg = hull<Spherical>({SPoint(end), SPoint(-end)}, opt.tol);
  const Warp<Spherical> warp(SPoint(0.0), k);
  const auto image = dilate_region(Region<Spherical>::polygon(seg), warp, opt.tol);
  // Points at distance pi / (2k) from 0 land at distance pi / 2 on either side: an antipodal pair.
  const double pre = std::tan(kPi / (4.0 * k));
  const SPoint u = warp.forward(SPoint(pre)), v = warp.forward(SPoint(-pre));
  std::optional<Witness<Spherical>> w;
  if (s_dist(u, v) >= kPi - kAntipodalFlag) {
    const auto [p, e] = antipodal_probe(image, u);
    w = Witness<Spherical>{Witness<Spherical>::Kind::antipodal, u, v, 0.5, p, e};
  }
  rep.construction = {{"model", "spherical"},
                      {"set", "geodesic segment through 0 of length 0.98 pi"},
                      {"endpoints", {point_to_json(SPoint(end)), point_to_json(SPoint(-end))}},
                      {"dilation_center", point_to_json(Complex(0.0))},
                      {"k", k},
                      {"antipodal_pair", {point_to_json(u), point_to_json(v)}},
                      {"antipodal_pair_distance", s_dist(u, v)}};
  merge_result(rep, image, w, opt.trials, opt.samples_per_segment, seed, opt.tol);
  return rep;
}

}  // namespace detail

/// Vertices of the Figure 1 triangle: 0 and tan(0.45 pi) e^{i pi/6}, e^{i pi/3}.
inline std::vector<SPoint> figure1_points() {
  const double r = std::tan(0.45 * kPi);
  return {SPoint(0.0), SPoint(std::polar(r, kPi / 6)), SPoint(std::polar(r, kPi / 3))};
}

/// Contraction factor of Figure 1.
inline constexpr double kFigure1K = 0.9;

namespace detail {

inline CounterexampleReport case_figure1(Seed seed, const CounterexampleOptions& opt) {
  CounterexampleReport rep;
  rep.id = CounterexampleId::s_contract_beyond_hemisphere;
  const auto pts = figure1_points();
  const auto tri = hull<Spherical>(std::span<const SPoint>(pts), opt.tol);
  const Warp<Spherical> warp(SPoint(0.0), kFigure1K);
  const auto image = dilate_region(Region<Spherical>::polygon(tri), warp, opt.tol);
  const auto w = best_on_segment(image, warp.forward(pts[1]), warp.forward(pts[2]));
  Json verts = Json::array();
  for (const auto& p : pts) verts.push_back(point_to_json(p));
  rep.construction = {{"model", "spherical"},
                      {"set", "s-convex hull of 0, tan(0.45 pi) e^{i pi/6}, tan(0.45 pi) e^{i pi/3}"},
                      {"points", verts},
                      {"hull_vertices", tri.size()},
                      {"dilation_center", point_to_json(Complex(0.0))},
                      {"k", kFigure1K}};
  merge_result(rep, image, std::optional<Witness<Spherical>>(w), opt.trials, opt.samples_per_segment, seed, opt.tol);
  return rep;
}

}  // namespace detail

/// Builds the case's set and dilation, then looks for a violation both with
/// a constructed witness and with check_convex; the larger margin is reported.
inline CounterexampleReport run_counterexample(CounterexampleId id, Seed seed,
                                               const CounterexampleOptions& opt = {}) {
  opt.tol.validate();
  switch (id) {
    case CounterexampleId::h_contract_halfplane: return detail::case_halfplane(seed, opt);
    case CounterexampleId::dilate_outside_point: return detail::case_outside_point(seed, opt);
    case CounterexampleId::s_expand_long_geodesic: return detail::case_long_geodesic(seed, opt);
    case CounterexampleId::s_contract_beyond_hemisphere: return detail::case_figure1(seed, opt);
  }
  throw DomainError("run_counterexample: unknown case");
}

/// Runs the requested cases (all four by default) into one suite report;
/// the expectation is a violation in every case with margin > min_margin.
inline SuiteReport run_counterexample_suite(const std::vector<CounterexampleId>& ids, Seed seed,
                                            const CounterexampleOptions& opt = {}, double min_margin = 1e-3) {
  SuiteReport rep;
  rep.suite = "counterexamples";
  rep.seed = seed;
  rep.params = {{"trials", opt.trials},
                {"samples_per_segment", opt.samples_per_segment},
                {"center_on_segment", opt.center_on_segment},
                {"min_margin", min_margin},
                {"tolerances", tolerances_to_json(opt.tol)}};
  Json cases = Json::array();
  for (auto id : ids) cases.push_back(counterexample_name(id));
  rep.params["cases"] = cases;
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (auto id : ids) {
    const auto r = run_counterexample(id, seed, opt);
    const bool met = r.expectation_met() && (!r.expect_violation || r.margin > min_margin);
    ok = ok && met;
    if (std::isfinite(r.margin)) worst = std::min(worst, r.margin);
    Json j = r.to_json();
    j["expectation_met"] = met;
    rep.runs.push_back(std::move(j));
  }
  rep.expectation_met = ok;
  rep.verdict = ok ? "as-expected" : "unexpected";
  if (std::isfinite(worst)) rep.worst_margin = worst;
  return rep;
}

// ---------------------------------------------------------------------------
// Proof consistency

struct ProofConsistencyConfig {
  std::size_t samples = 10000;
  Seed seed{};
  /// geometric vs closed-form modulus
  double geometric_tol = 1e-10;
  /// s = 1 equality and rho >= r slack
  double identity_tol = 1e-12;
  Tolerances tol{};
};

namespace detail {

struct ConsistencyTally {
  std::size_t configs = 0;
  std::size_t geometric_fail = 0, unit_fail = 0, curvature_fail = 0, inequality_fail = 0;
  double geometric_err = 0, unit_err = 0, worst_curvature = 0, worst_gap = 0;
  std::size_t curvature_checked = 0;

  bool pass() const { return geometric_fail + unit_fail + curvature_fail + inequality_fail == 0; }

  Json to_json(std::string_view model) const {
    return {{"model", model},
            {"configurations", configs},
            {"geometric_vs_closed_form", {{"failures", geometric_fail}, {"max_abs_error", geometric_err}}},
            {"unit_s_equality", {{"failures", unit_fail}, {"max_abs_error", unit_err}}},
            {"curvature", {{"failures", curvature_fail}, {"checked", curvature_checked}, {"worst", worst_curvature}}},
            {"rho_ge_r", {{"failures", inequality_fail}, {"min_gap", worst_gap}}},
            {"pass", pass()}};
  }
};

// Random configuration in normal position: theta1 in [0, pi/2), an angular
// gap in [0.05, pi - theta1 - 0.05), lambda strictly inside.
inline void random_angles(Rng& rng, double& th1, double& th2, double& lam) {
  th1 = rng.uniform(0.0, kPi / 2);
  th2 = th1 + rng.uniform(0.05, kPi - th1 - 0.05);
  lam = th1 + (th2 - th1) * rng.uniform(0.02, 0.98);
}

inline ConsistencyTally hyperbolic_consistency(const ProofConsistencyConfig& cfg) {
  ConsistencyTally tally;
  tally.worst_gap = std::numeric_limits<double>::infinity();
  tally.worst_curvature = -std::numeric_limits<double>::infinity();
  const double h = cfg.tol.fd_step;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng(cfg.seed, i);
    RadialComparison rc;
    rc.gamma1 = rng.uniform(0.05, 3.0);
    rc.gamma2 = rng.uniform(0.05, 3.0);
    random_angles(rng, rc.theta1, rc.theta2, rc.lambda);
    rc.s = rng.uniform(0.01, 1.0);
    ++tally.configs;

    for (double s : {rc.s, 1.0}) {
      const auto at = rc.with_s(s);
      const double err = std::abs(std::tanh(h_rho_geometric(at, cfg.tol)) - std::tanh(h_rho_closed_form(at)));
      tally.geometric_err = std::max(tally.geometric_err, err);
      if (!(err <= cfg.geometric_tol)) ++tally.geometric_fail;
    }

    const double unit = std::abs(h_rho_closed_form(rc.with_s(1.0)) - h_r_closed_form(rc.with_s(1.0)));
    tally.unit_err = std::max(tally.unit_err, unit);
    if (!(unit <= cfg.identity_tol)) ++tally.unit_fail;

    if (rc.s > 2 * h) {
      const double d2 = second_fd([&](double s) { return h_rho_closed_form(rc.with_s(s)); }, rc.s, h);
      ++tally.curvature_checked;
      tally.worst_curvature = std::max(tally.worst_curvature, d2);
      if (d2 > cfg.tol.fd_tol) ++tally.curvature_fail;
    }

    const double gap = h_rho_closed_form(rc) - h_r_closed_form(rc);
    tally.worst_gap = std::min(tally.worst_gap, gap);
    if (gap < -cfg.identity_tol) ++tally.inequality_fail;
  }
  return tally;
}

inline ConsistencyTally spherical_consistency(const ProofConsistencyConfig& cfg) {
  ConsistencyTally tally;
  tally.worst_gap = std::numeric_limits<double>::infinity();
  tally.worst_curvature = std::numeric_limits<double>::infinity();
  const double h = cfg.tol.fd_step;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng(cfg.seed, i ^ 0x5a5a5a5a5a5aULL);
    SRadialComparison rc;
    rc.gamma1 = rng.uniform(0.02, kPi / 4);
    rc.gamma2 = rng.uniform(0.02, kPi / 4);
    random_angles(rng, rc.theta1, rc.theta2, rc.lambda);
    rc.s = rng.uniform(1.0, rc.s_star());
    ++tally.configs;

    for (double s : {rc.s, 1.0}) {
      const auto at = rc.with_s(s);
      const double err = std::abs(std::tan(s_rho_geometric(at, cfg.tol)) - std::tan(s_rho_closed_form(at)));
      tally.geometric_err = std::max(tally.geometric_err, err);
      if (!(err <= cfg.geometric_tol)) ++tally.geometric_fail;
    }

    const double unit = std::abs(s_rho_closed_form(rc.with_s(1.0)) - s_r_closed_form(rc.with_s(1.0)));
    tally.unit_err = std::max(tally.unit_err, unit);
    if (!(unit <= cfg.identity_tol)) ++tally.unit_fail;

    // Convexity in s on (0, s*], probed at a uniform point of that interval.
    const double s_probe = rng.uniform(2 * h, rc.s_star() - 2 * h);
    const double d2 = second_fd([&](double s) { return s_rho_closed_form(rc.with_s(s)); }, s_probe, h);
    ++tally.curvature_checked;
    tally.worst_curvature = std::min(tally.worst_curvature, d2);
    if (d2 < -cfg.tol.fd_tol) ++tally.curvature_fail;

    const double gap = s_rho_closed_form(rc) - s_r_closed_form(rc);
    tally.worst_gap = std::min(tally.worst_gap, gap);
    if (gap < -cfg.identity_tol) ++tally.inequality_fail;
  }
  return tally;
}

}  // namespace detail

/// For random radial configurations in both geometries: the geometric
/// intersection modulus agrees with the closed form (at the sampled s and at
/// s = 1), the closed forms for rho and r coincide at s = 1, the curvature in
/// s has the sign the lemmas give, and rho >= r on the theorem's s range.
inline SuiteReport run_proof_consistency(const ProofConsistencyConfig& cfg) {
  cfg.tol.validate();
  SuiteReport rep;
  rep.suite = "proof-consistency";
  rep.seed = cfg.seed;
  rep.params = {{"samples", cfg.samples},
                {"geometric_tol", cfg.geometric_tol},
                {"identity_tol", cfg.identity_tol},
                {"hyperbolic_s_range", {0.01, 1.0}},
                {"spherical_s_range", "[1, s*]"},
                {"tolerances", tolerances_to_json(cfg.tol)}};
  const auto hyp = detail::hyperbolic_consistency(cfg);
  const auto sph = detail::spherical_consistency(cfg);
  rep.runs.push_back(hyp.to_json("hyperbolic"));
  rep.runs.push_back(sph.to_json("spherical"));
  rep.expectation_met = hyp.pass() && sph.pass();
  rep.verdict = rep.expectation_met ? "pass" : "fail";
  rep.worst_margin = std::min(hyp.worst_gap, sph.worst_gap);
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma suites

struct LemmaSuiteConfig {
  std::size_t tuples = 200;
  std::size_t boundary_tuples = 50;
  std::size_t grid_points = 512;
  Seed seed{};
  Tolerances tol{};
};

inline Json curvature_to_json(const CurvatureReport& r) {
  return {{"kind", lemma_name(r.kind)},
          {"params", {{"k1", r.params.k1}, {"k2", r.params.k2}, {"u1", r.params.u1}, {"u2", r.params.u2}}},
          {"grid", {{"lo", r.grid.lo}, {"hi", r.grid.hi}, {"points", r.grid.points}, {"spacing", "log"}}},
          {"hypothesis", r.hypothesis},
          {"worst_x", r.worst_x},
          {"worst_second_difference", r.worst_value},
          {"failures", r.failures},
          {"pass", r.pass}};
}

/// Certifies one lemma over random hypothesis-satisfying tuples, the boundary
/// family k1 + k2 = 1, and the linear anchor k1 = k2 = 1/2, u1 = u2.
inline SuiteReport run_lemma_suite(LemmaKind kind, const LemmaSuiteConfig& cfg) {
  cfg.tol.validate();
  SuiteReport rep;
  rep.suite = kind == LemmaKind::hyp ? "lemma3" : "lemma4";
  rep.seed = cfg.seed;
  rep.params = {{"tuples", cfg.tuples},
                {"boundary_tuples", cfg.boundary_tuples},
                {"grid_points", cfg.grid_points},
                {"tolerances", tolerances_to_json(cfg.tol)}};
  bool ok = true;
  double worst = kind == LemmaKind::hyp ? -std::numeric_limits<double>::infinity()
                                        : std::numeric_limits<double>::infinity();
  double anchor_worst = 0.0;
  const auto run_one = [&](const LemmaParams& p, std::string_view family) {
    auto grid = default_grid(kind, p, cfg.tol);
    grid.points = cfg.grid_points;
    const auto r = certify_curvature(kind, p, grid, cfg.tol);
    ok = ok && r.pass;
    worst = kind == LemmaKind::hyp ? std::max(worst, r.worst_value) : std::min(worst, r.worst_value);
    Json j = curvature_to_json(r);
    j["family"] = family;
    rep.runs.push_back(std::move(j));
    return r;
  };
  for (std::size_t i = 0; i < cfg.tuples + cfg.boundary_tuples; ++i) {
    Rng rng(cfg.seed, i);
    const bool boundary = i >= cfg.tuples;
    run_one(random_lemma_params(rng, boundary), boundary ? "boundary" : "random");
  }
  // Linear anchor: f(x) = u x, so the second difference must vanish in magnitude.
  for (double u : {0.1, 0.5, 1.0, 1.7}) {
    const LemmaParams p{0.5, 0.5, u, u};
    auto grid = default_grid(kind, p, cfg.tol);
    grid.points = cfg.grid_points;
    for (LemmaKind side : {LemmaKind::hyp, LemmaKind::sph}) {
      if (side != kind) continue;
      const auto r = certify_curvature(side, p, grid, cfg.tol);
      double mag = 0.0;
      for (double x : grid.abscissae()) {
        const long double h = cfg.tol.fd_step;
        const long double d2 = side == LemmaKind::hyp
                                   ? second_fd([&](long double y) { return f_hyp<long double>(p, y); },
                                               static_cast<long double>(x), h)
                                   : second_fd([&](long double y) { return f_sph<long double>(p, y); },
                                               static_cast<long double>(x), h);
        mag = std::max(mag, std::abs(static_cast<double>(d2)));
      }
      anchor_worst = std::max(anchor_worst, mag);
      const bool anchor_ok = mag <= cfg.tol.fd_tol;
      ok = ok && anchor_ok && r.pass;
      Json j = curvature_to_json(r);
      j["family"] = "linear-anchor";
      j["max_abs_second_difference"] = mag;
      j["pass"] = anchor_ok && r.pass;
      rep.runs.push_back(std::move(j));
    }
  }
  rep.params["anchor_max_abs_second_difference"] = anchor_worst;
  rep.expectation_met = ok;
  rep.verdict = ok ? "pass" : "fail";
  rep.worst_margin = worst;
  return rep;
}

// ---------------------------------------------------------------------------
// Conjecture explorer

struct ConjectureConfig {
  Model model = Model::hyperbolic;
  double k1_lo = 1.0, k1_hi = 3.0;
  double k2_lo = 1.0, k2_hi = 3.0;
  std::size_t polygons = 100;
  std::size_t trials = 1000;
  std::size_t samples_per_segment = 16;
  Seed seed{};
  Tolerances tol{};
};

/// Checks asymmetrically dilated random polygons for convexity violations.
/// Violations are reported as potential counterexamples to the conjecture;
/// the absence of violations is evidence only.
inline SuiteReport run_conjecture_scan(const ConjectureConfig& cfg) {
  TheoremSuiteConfig t;
  t.polygons = cfg.polygons;
  t.trials = cfg.trials;
  t.samples_per_segment = cfg.samples_per_segment;
  t.k_lo = cfg.k1_lo;
  t.k_hi = cfg.k1_hi;
  t.seed = cfg.seed;
  t.tol = cfg.tol;
  SuiteReport rep;
  switch (cfg.model) {
    case Model::hyperbolic:
      rep = detail::run_dilation_suite<Hyperbolic>("conjecture", t, detail::theorem1_instance, true, cfg.k2_lo, cfg.k2_hi);
      break;
    case Model::spherical:
      rep = detail::run_dilation_suite<Spherical>("conjecture", t, detail::theorem2_instance, true, cfg.k2_lo, cfg.k2_hi);
      break;
    case Model::euclidean:
      rep = detail::run_dilation_suite<Euclidean>(
          "conjecture", t,
          [](Rng& rng, const Tolerances& tol) {
            auto poly = random_polygon<Euclidean>(rng, kHypPolygonRadius, tol);
            const Complex c = sample(Region<Euclidean>::polygon(poly), rng, tol);
            return std::pair{std::move(poly), c};
          },
          true, cfg.k2_lo, cfg.k2_hi);
      break;
  }
  const bool in_hypotheses = cfg.model == Model::spherical ? (cfg.k1_hi <= 1.0 && cfg.k2_hi <= 1.0)
                                                           : (cfg.k1_lo >= 1.0 && cfg.k2_lo >= 1.0);
  rep.params["within_conjecture_hypotheses"] = in_hypotheses || cfg.model == Model::euclidean;
  if (rep.verdict == "violation") rep.verdict = "potential-counterexample";
  // Exploratory: finishing the scan is the expectation; the verdict carries the finding.
  rep.expectation_met = true;
  return rep;
}

}  // namespace geocvx
