#pragma once

// Reproduction of the contraction figure: the s-convex triangle C with
// vertices 0, tan(0.45 pi) e^{i pi/6}, tan(0.45 pi) e^{i pi/3}, its image C'
// under contraction by 0.9 about 0, and the s-convex hull of C' poking out of
// C'. The dotted quarter circle is the boundary of the hemisphere about 0.

#include <string>
#include <vector>

#include "geocvx/svg.hpp"
#include "geocvx/verify.hpp"

namespace geocvx {

inline std::string plot_figure1() {
  const auto pts = figure1_points();
  const auto tri = hull<Spherical>(std::span<const SPoint>(pts));
  const Warp<Spherical> warp(SPoint(0.0), kFigure1K);
  const auto base = Region<Spherical>::polygon(tri);
  const auto image = dilate_region(base, warp);
  const auto witness = detail::best_on_segment(image, warp.forward(pts[1]), warp.forward(pts[2]));

  // Frame the first quadrant around the content rather than the whole plane.
  std::vector<Complex> content = {Complex(0.0), Complex(1.0, 0.0), Complex(0.0, 1.0)};
  for (const auto& line : {region_outline(base), region_outline(image)}) {
    if (line) content.insert(content.end(), line->begin(), line->end());
  }
  PlotOptions opt;
  opt.view = View::framing(content);
  opt.unit_circle = false;
  std::string svg = plot_region(base, std::optional<Warp<Spherical>>(warp),
                                std::optional<Witness<Spherical>>(witness), opt);

  SvgCanvas arc(*opt.view);
  arc.unit_arc(0.0, kPi / 2, style::dotted);
  std::string extra = arc.finish();
  // Splice the arc's polyline into the main document, before the closing tag.
  const auto open = extra.find("<polyline");
  const auto close = extra.rfind("</svg>");
  svg.insert(svg.rfind("</svg>"), extra.substr(open, close - open));
  return svg;
}

}  // namespace geocvx
