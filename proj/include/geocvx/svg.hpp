#pragma once

// Hand-written SVG output. Fixed 800x800 canvas; curves are dense polylines
// (dilated boundaries are not circular arcs, so everything is treated alike).
// Numbers are printed with %.3f, making output byte-deterministic.
//
// Style tokens:
//   unit circle     solid black, 1px           (dotted 2,4 for the hemisphere arc)
//   base region     #1f77b4 stroke, 15% fill
//   dilated image   #d62728 stroke, 15% fill
//   hull of image   #2ca02c stroke, dashed 6,3, no fill
//   witness         #ff7f0e segment + 4px circle at the escaping point

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "geocvx/convexity.hpp"
#include "geocvx/geometry.hpp"
#include "geocvx/numerics.hpp"

namespace geocvx {

inline constexpr int kSvgSize = 800;
inline constexpr int kCurveSamples = 256;

/// Axis-aligned window of the complex plane drawn on the canvas.
struct View {
  double x0 = -1.0 / 0.9, y0 = -1.0 / 0.9, x1 = 1.0 / 0.9, y1 = 1.0 / 0.9;

  /// Square window around the bounding box of `pts` plus a 5% border.
  static View framing(const std::vector<Complex>& pts, double clamp = 20.0) {
    double a = 0, b = 0, c = 0, d = 0;
    bool first = true;
    for (Complex p : pts) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || std::abs(p) > clamp) continue;
      if (first) {
        a = c = p.real();
        b = d = p.imag();
        first = false;
      }
      a = std::min(a, p.real());
      c = std::max(c, p.real());
      b = std::min(b, p.imag());
      d = std::max(d, p.imag());
    }
    const double side = std::max({c - a, d - b, 1e-3}) * 1.1;
    const double mx = (a + c) / 2, my = (b + d) / 2;
    return {mx - side / 2, my - side / 2, mx + side / 2, my + side / 2};
  }
};

class SvgCanvas {
 public:
  explicit SvgCanvas(View view) : view_(view) {}

  /// Appends a polyline; non-finite points split it into pieces.
  void polyline(const std::vector<Complex>& pts, const std::string& style, bool closed = false) {
    std::string piece;
    std::size_t count = 0;
    const auto flush = [&] {
      if (count >= 2) body_ += "<polyline points=\"" + piece + "\" " + style + "/>\n";
      piece.clear();
      count = 0;
    };
    for (Complex p : pts) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
        flush();
        continue;
      }
      if (count) piece += ' ';
      piece += xy(p);
      ++count;
    }
    if (closed && count == pts.size() && count >= 2) piece += ' ' + xy(pts.front());
    flush();
  }

  void polygon(const std::vector<Complex>& pts, const std::string& style) {
    std::string s;
    for (Complex p : pts) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) return polyline(pts, style, true);
      if (!s.empty()) s += ' ';
      s += xy(p);
    }
    body_ += "<polygon points=\"" + s + "\" " + style + "/>\n";
  }

  void circle(Complex c, double radius_px, const std::string& style) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" ", px(c.real()), py(c.imag()), radius_px);
    body_ += buf + style + "/>\n";
  }

  /// Unit circle arc from angle a to b (radians), as a polyline.
  void unit_arc(double a, double b, const std::string& style) {
    std::vector<Complex> pts;
    for (int i = 0; i <= kCurveSamples; ++i) pts.push_back(std::polar(1.0, a + (b - a) * i / kCurveSamples));
    polyline(pts, style);
  }

  void text(Complex at, const std::string& s) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-size=\"14\" font-family=\"sans-serif\">",
                  px(at.real()), py(at.imag()));
    body_ += buf + s + "</text>\n";
  }

  std::string finish() const {
    char head[256];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n"
                  "<rect width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n",
                  kSvgSize, kSvgSize, kSvgSize, kSvgSize, kSvgSize, kSvgSize);
    return head + body_ + "</svg>\n";
  }

 private:
  double scale() const { return kSvgSize / std::max(view_.x1 - view_.x0, view_.y1 - view_.y0); }
  double px(double x) const { return (x - view_.x0) * scale(); }
  double py(double y) const { return (view_.y1 - y) * scale(); }
  std::string xy(Complex p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(p.real()), py(p.imag()));
    return buf;
  }

  View view_;
  std::string body_;
};

namespace style {
inline const std::string unit = "fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"";
inline const std::string dotted = "fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" stroke-dasharray=\"2,4\"";
inline const std::string base = "fill=\"#1f77b4\" fill-opacity=\"0.15\" stroke=\"#1f77b4\" stroke-width=\"2\"";
inline const std::string image = "fill=\"#d62728\" fill-opacity=\"0.15\" stroke=\"#d62728\" stroke-width=\"2\"";
inline const std::string hull = "fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\" stroke-dasharray=\"6,3\"";
inline const std::string witness = "fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"2\"";
inline const std::string marker = "fill=\"#ff7f0e\" stroke=\"#000000\" stroke-width=\"1\"";
}  // namespace style

/// Plane coordinates for drawing; the spherical point at infinity is NaN.
template <class G>
Complex plot_coords(const typename G::Point& p) {
  if constexpr (G::model == Model::spherical) {
    if (p.is_infinity()) return {std::nan(""), std::nan("")};
  }
  return G::coords(p);
}

/// Closed boundary of a geodesic polygon, kCurveSamples points per edge.
template <class G>
std::vector<typename G::Point> polygon_boundary(const GeodesicPolygon<G>& poly) {
  const auto& v = poly.vertices();
  std::vector<typename G::Point> out;
  if (v.size() == 1) return {v[0]};
  const std::size_t edges = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    for (int j = 0; j < kCurveSamples; ++j) out.push_back(G::segment_point(a, b, static_cast<double>(j) / kCurveSamples));
  }
  if (v.size() == 2) out.push_back(v[1]);
  return out;
}

/// Boundary samples of a region: polygon edges, disk circles, and images of
/// a base boundary under a dilation. Other oracles have no drawable boundary.
template <class G>
std::optional<std::vector<Complex>> region_outline(const Region<G>& r) {
  std::vector<typename G::Point> pts;
  if (r.is_polygon()) {
    pts = polygon_boundary(r.as_polygon());
  } else if (r.is_oracle()) {
    const auto* disk = std::get_if<typename Oracle<G>::Disk>(&r.as_oracle().shape);
    if (!disk) return std::nullopt;
    for (int j = 0; j < kCurveSamples; ++j) {
      pts.push_back(G::translate(disk->center, G::from_polar(disk->radius, 2 * kPi * j / kCurveSamples)));
    }
  } else {
    const auto& d = r.as_dilated();
    auto inner = region_outline(d.base);
    if (!inner) return std::nullopt;
    std::vector<Complex> out;
    for (Complex c : *inner) {
      try {
        out.push_back(plot_coords<G>(d.warp.forward(G::make(c))));
      } catch (const Error&) {
        out.push_back({std::nan(""), std::nan("")});
      }
    }
    return out;
  }
  std::vector<Complex> out;
  for (const auto& p : pts) out.push_back(plot_coords<G>(p));
  return out;
}

struct PlotOptions {
  std::optional<View> view;
  bool unit_circle = true;
};

/// A region, optionally its dilation, the geodesic hull of the dilated
/// vertices (polygons only) and an optional witness.
template <class G>
std::string plot_region(const Region<G>& base, const std::optional<Warp<G>>& dilation,
                        const std::optional<Witness<G>>& witness = std::nullopt, const PlotOptions& opt = {}) {
  const auto base_line = region_outline(base);
  std::optional<std::vector<Complex>> image_line;
  std::optional<std::vector<Complex>> hull_line;
  if (dilation) {
    image_line = region_outline(Region<G>::dilated(base, *dilation));
    if (base.is_polygon()) {
      std::vector<typename G::Point> imgs;
      for (const auto& v : base.as_polygon().vertices()) {
        try {
          imgs.push_back(dilation->forward(v));
        } catch (const Error&) {
        }
      }
      try {
        const auto h = hull<G>(std::span<const typename G::Point>(imgs));
        std::vector<Complex> line;
        for (const auto& p : polygon_boundary(h)) line.push_back(plot_coords<G>(p));
        hull_line = line;
      } catch (const Error&) {
      }
    }
  }
  std::vector<Complex> witness_line;
  if (witness) {
    if (witness->kind == Witness<G>::Kind::segment) {
      for (int j = 0; j <= kCurveSamples; ++j) {
        witness_line.push_back(plot_coords<G>(G::segment_point(witness->u, witness->v, static_cast<double>(j) / kCurveSamples)));
      }
    } else {
      witness_line = {plot_coords<G>(witness->u), plot_coords<G>(witness->point), plot_coords<G>(witness->v)};
    }
  }

  View view;
  if (opt.view) {
    view = *opt.view;
  } else if constexpr (G::model == Model::spherical || G::model == Model::euclidean) {
    std::vector<Complex> all = {Complex(-1, -1), Complex(1, 1)};
    using Line = std::optional<std::vector<Complex>>;
    for (const Line* l : std::initializer_list<const Line*>{&base_line, &image_line, &hull_line}) {
      if (*l) all.insert(all.end(), (*l)->begin(), (*l)->end());
    }
    all.insert(all.end(), witness_line.begin(), witness_line.end());
    view = View::framing(all);
  }

  SvgCanvas svg(view);
  if (opt.unit_circle) svg.unit_arc(0, 2 * kPi, style::unit);
  if (base_line) svg.polygon(*base_line, style::base);
  if (image_line) svg.polygon(*image_line, style::image);
  if (hull_line) svg.polygon(*hull_line, style::hull);
  if (witness) {
    svg.polyline(witness_line, style::witness);
    svg.circle(plot_coords<G>(witness->point), 4, style::marker);
  }
  return svg.finish();
}

}  // namespace geocvx
