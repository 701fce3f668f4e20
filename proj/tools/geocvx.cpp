// geocvx command-line front end.
//
//   geocvx verify <suite> [flags]      theorem1 theorem2 lemma3 lemma4 counterexamples proof-consistency conjecture
//   geocvx plot <target> [flags]       figure1 region suite-witness
//   geocvx hull --input pts.json
//   geocvx dilate --input pts.json --k K [--center re,im] [--k2 K2]
//
// Exit status: 0 expectation met, 1 unexpected outcome, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geocvx/geocvx.hpp"

namespace {

using namespace geocvx;

constexpr std::uint64_t kDefaultSeed = 1729;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string suite;
  std::string target;
  std::string model = "hyperbolic";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> polygons;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> samples_per_segment;
  std::vector<double> k_range;
  std::vector<double> k2_range;
  std::vector<std::string> cases;
  bool center_on_segment = false;
  std::string out;
  std::string input;
  std::string report;
  bool json = false;
  bool no_timestamp = false;
  std::optional<double> k;
  std::optional<double> k2;
  std::vector<double> center;
  std::vector<double> dilate;
  Tolerances tol{};
};

Seed resolve_seed(const Options& o) {
  if (o.seed) return Seed{*o.seed};
  if (const char* env = std::getenv("GEOCVX_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return Seed{v};
    } catch (const std::exception&) {
    }
    throw UsageError("GEOCVX_SEED must be an unsigned integer");
  }
  return Seed{kDefaultSeed};
}

std::optional<std::string> timestamp(const Options& o) {
  if (o.no_timestamp) return std::nullopt;
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) now = static_cast<std::time_t>(std::stoll(epoch));
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty() || o.out == "-") {
    std::cout << content;
  } else {
    write_file_atomic(o.out, content);
  }
}

std::pair<double, double> range_or(const std::vector<double>& r, double lo, double hi, const char* flag) {
  if (r.empty()) return {lo, hi};
  if (r.size() != 2 || !(r[0] > 0) || !(r[1] >= r[0])) {
    throw UsageError(std::string(flag) + " expects lo,hi with 0 < lo <= hi");
  }
  return {r[0], r[1]};
}

int finish_report(const Options& o, const SuiteReport& rep) {
  emit(o, rep.to_json(timestamp(o)).dump(2) + "\n");
  if (o.json && !o.out.empty() && o.out != "-") {
    std::cout << Json{{"suite", rep.suite}, {"verdict", rep.verdict}, {"expectation_met", rep.expectation_met}}.dump()
              << "\n";
  }
  std::cerr << rep.suite << ": " << rep.verdict << (rep.expectation_met ? " (as expected)" : " (UNEXPECTED)") << "\n";
  return rep.expectation_met ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const Seed seed = resolve_seed(o);
  const std::string& s = o.suite;
  if (s == "theorem1" || s == "theorem2") {
    auto cfg = s == "theorem1" ? theorem1_defaults() : theorem2_defaults();
    cfg.seed = seed;
    cfg.tol = o.tol;
    if (o.trials) cfg.trials = *o.trials;
    if (o.polygons) cfg.polygons = *o.polygons;
    if (o.samples_per_segment) cfg.samples_per_segment = *o.samples_per_segment;
    std::tie(cfg.k_lo, cfg.k_hi) = range_or(o.k_range, cfg.k_lo, cfg.k_hi, "--k-range");
    return finish_report(o, s == "theorem1" ? run_theorem1_suite(cfg) : run_theorem2_suite(cfg));
  }
  if (s == "lemma3" || s == "lemma4") {
    LemmaSuiteConfig cfg;
    cfg.seed = seed;
    cfg.tol = o.tol;
    if (o.samples) cfg.tuples = *o.samples;
    return finish_report(o, run_lemma_suite(s == "lemma3" ? LemmaKind::hyp : LemmaKind::sph, cfg));
  }
  if (s == "counterexamples") {
    CounterexampleOptions opt;
    opt.tol = o.tol;
    opt.center_on_segment = o.center_on_segment;
    if (o.trials) opt.trials = *o.trials;
    if (o.samples_per_segment) opt.samples_per_segment = *o.samples_per_segment;
    std::vector<CounterexampleId> ids;
    for (const auto& c : o.cases) {
      try {
        ids.push_back(parse_counterexample(c));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
    if (ids.empty()) ids.assign(std::begin(kAllCounterexamples), std::end(kAllCounterexamples));
    return finish_report(o, run_counterexample_suite(ids, seed, opt));
  }
  if (s == "proof-consistency") {
    ProofConsistencyConfig cfg;
    cfg.seed = seed;
    cfg.tol = o.tol;
    if (o.samples) cfg.samples = *o.samples;
    return finish_report(o, run_proof_consistency(cfg));
  }
  if (s == "conjecture") {
    ConjectureConfig cfg;
    cfg.seed = seed;
    cfg.tol = o.tol;
    try {
      cfg.model = parse_model(o.model);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (cfg.model == Model::spherical) cfg.k1_lo = cfg.k2_lo = 0.2, cfg.k1_hi = cfg.k2_hi = 1.0;
    std::tie(cfg.k1_lo, cfg.k1_hi) = range_or(o.k_range, cfg.k1_lo, cfg.k1_hi, "--k-range");
    std::tie(cfg.k2_lo, cfg.k2_hi) = range_or(o.k2_range, cfg.k1_lo, cfg.k1_hi, "--k2-range");
    if (o.trials) cfg.trials = *o.trials;
    if (o.polygons) cfg.polygons = *o.polygons;
    if (o.samples_per_segment) cfg.samples_per_segment = *o.samples_per_segment;
    return finish_report(o, run_conjecture_scan(cfg));
  }
  throw UsageError("unknown suite '" + s + "'");
}

// --- data commands -------------------------------------------------------

struct Loaded {
  std::string text;
  Json doc;
  Model model;
};

Loaded load(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  Loaded l;
  l.text = read_text_file(path);
  l.doc = parse_json_text(l.text);
  l.model = with_line_diagnostics(l.text, l.doc, [](const Json& d) { return model_from_json(d); });
  return l;
}

template <class G>
std::vector<typename G::Point> load_points(const Loaded& l) {
  return with_line_diagnostics(l.text, l.doc, [](const Json& d) { return point_list_from_json<G>(d); });
}

template <class G>
typename G::Point parse_center(const std::vector<double>& c) {
  if (c.empty()) return G::origin();
  if (c.size() != 2) throw UsageError("--center expects re,im");
  try {
    return G::make(Complex(c[0], c[1]));
  } catch (const Error& e) {
    throw UsageError(std::string("--center: ") + e.what());
  }
}

template <class G>
int hull_as(const Options& o, const Loaded& l) {
  const auto pts = load_points<G>(l);
  if (pts.empty()) throw InputError("\"points\" must not be empty", locate_line(l.text, {"points"}));
  const auto poly = hull<G>(std::span<const typename G::Point>(pts), o.tol);
  Json out = point_list_to_json<G>(std::span<const typename G::Point>(poly.vertices()));
  out["vertices"] = out["points"];
  out.erase("points");
  out["notes"] = poly.notes();
  emit(o, out.dump(2) + "\n");
  return 0;
}

int cmd_hull(const Options& o) {
  const auto l = load(o.input);
  switch (l.model) {
    case Model::hyperbolic: return hull_as<Hyperbolic>(o, l);
    case Model::spherical: return hull_as<Spherical>(o, l);
    case Model::euclidean: return hull_as<Euclidean>(o, l);
  }
  return 2;
}

template <class G>
int dilate_as(const Options& o, const Loaded& l) {
  if (!o.k) throw UsageError("--k is required");
  const auto pts = load_points<G>(l);
  const auto c = parse_center<G>(o.center);
  const double k2 = o.k2.value_or(*o.k);
  const Warp<G> warp(c, *o.k, k2);
  Json probes = Json::array();
  for (const auto& p : pts) {
    Json entry{{"input", point_to_json(p)}};
    try {
      entry["output"] = point_to_json(warp.forward(p));
    } catch (const Error& e) {
      entry["output"] = nullptr;
      entry["error"] = e.what();
    }
    probes.push_back(entry);
  }
  Json out{{"model", model_name(G::model)}, {"center", point_to_json(c)}, {"k1", *o.k}, {"k2", k2}, {"probes", probes}};
  if (*o.k != k2) out["interpretation"] = kAsymInterpretation;
  emit(o, out.dump(2) + "\n");
  return 0;
}

int cmd_dilate(const Options& o) {
  const auto l = load(o.input);
  switch (l.model) {
    case Model::hyperbolic: return dilate_as<Hyperbolic>(o, l);
    case Model::spherical: return dilate_as<Spherical>(o, l);
    case Model::euclidean: return dilate_as<Euclidean>(o, l);
  }
  return 2;
}

// --- plots ---------------------------------------------------------------

template <class G>
std::optional<Warp<G>> parse_dilate(const std::vector<double>& d) {
  if (d.empty()) return std::nullopt;
  try {
    if (d.size() == 2) return Warp<G>(G::make(Complex(d[0], 0.0)), d[1]);
    if (d.size() == 3) return Warp<G>(G::make(Complex(d[0], d[1])), d[2]);
  } catch (const Error& e) {
    throw UsageError(std::string("--dilate: ") + e.what());
  }
  throw UsageError("--dilate expects re,k or re,im,k");
}

template <class G>
std::string plot_points_region(const Options& o, const Loaded& l) {
  const auto pts = load_points<G>(l);
  if (pts.empty()) throw InputError("\"points\" must not be empty", locate_line(l.text, {"points"}));
  const auto poly = hull<G>(std::span<const typename G::Point>(pts), o.tol);
  return plot_region(Region<G>::polygon(poly), parse_dilate<G>(o.dilate));
}

template <class G>
Witness<G> witness_from_json(const Json& w) {
  Witness<G> out;
  out.kind = w.at("kind") == "antipodal" ? Witness<G>::Kind::antipodal : Witness<G>::Kind::segment;
  out.u = point_from_json<G>(w.at("u"));
  out.v = point_from_json<G>(w.at("v"));
  out.t = w.at("t").get<double>();
  out.point = point_from_json<G>(w.at("point"));
  out.margin = w.at("margin").get<double>();
  return out;
}

template <class G>
std::string plot_suite_run(const Json& run, const Json* witness) {
  std::vector<typename G::Point> verts;
  for (const auto& v : run.at("vertices")) verts.push_back(point_from_json<G>(v));
  const auto poly = hull<G>(std::span<const typename G::Point>(verts));
  const auto c = point_from_json<G>(run.at("center"));
  const Warp<G> warp = run.contains("k") ? Warp<G>(c, run["k"].get<double>())
                                         : Warp<G>(c, run.at("k1").get<double>(), run.at("k2").get<double>());
  std::optional<Witness<G>> w;
  if (witness) w = witness_from_json<G>(*witness);
  return plot_region(Region<G>::polygon(poly), std::optional<Warp<G>>(warp), w);
}

template <class G>
std::string plot_lone_witness(const Json& witness) {
  const auto w = witness_from_json<G>(witness);
  std::vector<Complex> line;
  if (w.kind == Witness<G>::Kind::segment) {
    for (int j = 0; j <= kCurveSamples; ++j) {
      line.push_back(plot_coords<G>(G::segment_point(w.u, w.v, static_cast<double>(j) / kCurveSamples)));
    }
  } else {
    line = {plot_coords<G>(w.u), plot_coords<G>(w.point), plot_coords<G>(w.v)};
  }
  std::vector<Complex> frame = line;
  frame.push_back(Complex(-1, -1));
  frame.push_back(Complex(1, 1));
  SvgCanvas svg(G::model == Model::hyperbolic ? View{} : View::framing(frame));
  svg.unit_arc(0, 2 * kPi, style::unit);
  svg.polyline(line, style::witness);
  svg.circle(plot_coords<G>(w.point), 4, style::marker);
  return svg.finish();
}

std::string plot_suite_witness(const Options& o) {
  if (o.report.empty()) throw UsageError("--report is required");
  const std::string text = read_text_file(o.report);
  const Json rep = parse_json_text(text);
  try {
    const Json& runs = rep.at("runs");
    const std::string suite = rep.at("suite");
    for (const auto& run : runs) {
      if (suite == "counterexamples") {
        const Json& w = run.at("witness");
        if (w.is_null()) continue;
        switch (parse_model(w.at("model").get<std::string>())) {
          case Model::hyperbolic: return plot_lone_witness<Hyperbolic>(w);
          case Model::spherical: return plot_lone_witness<Spherical>(w);
          case Model::euclidean: return plot_lone_witness<Euclidean>(w);
        }
      }
      const Json& w = run.at("check").at("witness");
      if (w.is_null()) continue;
      switch (parse_model(rep.at("params").at("model").get<std::string>())) {
        case Model::hyperbolic: return plot_suite_run<Hyperbolic>(run, &w);
        case Model::spherical: return plot_suite_run<Spherical>(run, &w);
        case Model::euclidean: return plot_suite_run<Euclidean>(run, &w);
      }
    }
    // No witness anywhere: draw the first run's region (theorem-style reports only).
    if (suite != "counterexamples" && !runs.empty()) {
      switch (parse_model(rep.at("params").at("model").get<std::string>())) {
        case Model::hyperbolic: return plot_suite_run<Hyperbolic>(runs[0], nullptr);
        case Model::spherical: return plot_suite_run<Spherical>(runs[0], nullptr);
        case Model::euclidean: return plot_suite_run<Euclidean>(runs[0], nullptr);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report does not match the report schema: ") + e.what());
  } catch (const detail::SchemaError& e) {
    throw InputError(e.message + " (at " + detail::path_string(e.path) + ")");
  }
  throw InputError("report contains nothing to plot");
}

int cmd_plot(const Options& o) {
  std::string svg;
  if (o.target == "figure1") {
    svg = plot_figure1();
  } else if (o.target == "region") {
    const auto l = load(o.input);
    switch (l.model) {
      case Model::hyperbolic: svg = plot_points_region<Hyperbolic>(o, l); break;
      case Model::spherical: svg = plot_points_region<Spherical>(o, l); break;
      case Model::euclidean: svg = plot_points_region<Euclidean>(o, l); break;
    }
  } else if (o.target == "suite-witness") {
    svg = plot_suite_witness(o);
  } else {
    throw UsageError("unknown plot target '" + o.target + "'");
  }
  emit(o, svg);
  return 0;
}

void add_tolerance_flags(CLI::App* app, Options& o) {
  app->add_option("--eq-abs", o.tol.eq_abs, "absolute tolerance for exact identities")->capture_default_str();
  app->add_option("--margin", o.tol.margin, "minimum escape distance of a violation")->capture_default_str();
  app->add_option("--fd-step", o.tol.fd_step, "finite-difference step")->capture_default_str();
  app->add_option("--fd-tol", o.tol.fd_tol, "second-difference sign tolerance")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial dilations and geodesic convexity in the hyperbolic and spherical planes"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "theorem1 | theorem2 | lemma3 | lemma4 | counterexamples | proof-consistency | conjecture")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma3", "lemma4", "counterexamples", "proof-consistency", "conjecture"}));
  verify->add_option("--model", o.model, "model for the conjecture scan")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed (default: $GEOCVX_SEED, else 1729)");
  verify->add_option("--trials", o.trials, "segment trials per region");
  verify->add_option("--polygons", o.polygons, "random polygons per suite");
  verify->add_option("--samples", o.samples, "configurations (proof-consistency) or parameter tuples (lemmas)");
  verify->add_option("--samples-per-segment", o.samples_per_segment, "points checked on each segment");
  verify->add_option("--k-range", o.k_range, "dilation factor range lo,hi")->delimiter(',')->expected(2);
  verify->add_option("--k2-range", o.k2_range, "second-axis factor range for the conjecture scan")->delimiter(',')->expected(2);
  verify->add_option("--case", o.cases, "counterexample case id (repeatable)");
  verify->add_flag("--center-on-segment", o.center_on_segment, "dilate-outside-point control: center on the segment");
  verify->add_option("--out", o.out, "report path (default stdout)");
  verify->add_flag("--json", o.json, "also print a one-line JSON verdict to stdout when --out is set");
  verify->add_flag("--no-timestamp", o.no_timestamp, "write null instead of the current time");
  add_tolerance_flags(verify, o);

  auto* plot = app.add_subcommand("plot", "write an SVG plot");
  plot->add_option("target", o.target, "figure1 | region | suite-witness")
      ->required()
      ->check(CLI::IsMember({"figure1", "region", "suite-witness"}));
  plot->add_option("--input", o.input, "point-list JSON (region)");
  plot->add_option("--dilate", o.dilate, "re,k or re,im,k")->delimiter(',');
  plot->add_option("--report", o.report, "suite report JSON (suite-witness)");
  plot->add_option("--out", o.out, "SVG path (default stdout)");
  add_tolerance_flags(plot, o);

  auto* hull_cmd = app.add_subcommand("hull", "geodesic convex hull of a point list");
  hull_cmd->add_option("--input", o.input, "point-list JSON")->required();
  hull_cmd->add_option("--out", o.out, "output path (default stdout)");
  add_tolerance_flags(hull_cmd, o);

  auto* dilate_cmd = app.add_subcommand("dilate", "apply a radial dilation to a point list");
  dilate_cmd->add_option("--input", o.input, "point-list JSON")->required();
  dilate_cmd->add_option("--k", o.k, "dilation factor")->required();
  dilate_cmd->add_option("--k2", o.k2, "second-axis factor (asymmetric)");
  dilate_cmd->add_option("--center", o.center, "re,im (default 0)")->delimiter(',');
  dilate_cmd->add_option("--out", o.out, "output path (default stdout)");
  add_tolerance_flags(dilate_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    o.tol.validate();
    if (verify->parsed()) return cmd_verify(o);
    if (plot->parsed()) return cmd_plot(o);
    if (hull_cmd->parsed()) return cmd_hull(o);
    if (dilate_cmd->parsed()) return cmd_dilate(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
