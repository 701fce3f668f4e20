#include <gtest/gtest.h>

#include <filesystem>

#include "geocvx/geocvx.hpp"

namespace {

using namespace geocvx;

TEST(PointJson, RoundTrip) {
  const std::vector<SPoint> pts{SPoint(0.1, -0.2), SPoint::infinity(), SPoint(3.5, 0.0)};
  const Json doc = point_list_to_json<Spherical>(std::span<const SPoint>(pts));
  EXPECT_EQ(doc["points"][1], "infinity");
  EXPECT_EQ(point_list_from_json<Spherical>(doc), pts);
  const Json again = Json::parse(doc.dump());
  EXPECT_EQ(again, doc);
}

TEST(PointJson, SchemaErrorsCarryLines) {
  const std::string text = "{\n  \"model\": \"hyperbolic\",\n  \"points\": [\n    [0.1, 0.2],\n    [0.3]\n  ]\n}\n";
  const Json doc = parse_json_text(text);
  try {
    with_line_diagnostics(text, doc, [](const Json& d) { return point_list_from_json<Hyperbolic>(d); });
    FAIL() << "expected an InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("/points/1"), std::string::npos);
  }
}

TEST(PointJson, ModelErrors) {
  const std::string text = "{\"model\": \"hyperbolic\", \"points\": []}";
  const Json doc = parse_json_text(text);
  EXPECT_THROW(with_line_diagnostics(text, doc, [](const Json& d) { return point_list_from_json<Spherical>(d); }),
               InputError);
  EXPECT_THROW(parse_json_text("{\"model\": }"), InputError);
  EXPECT_THROW(
      with_line_diagnostics("[]", Json::array(), [](const Json& d) { return model_from_json(d); }), InputError);
  const Json inf = Json::parse(R"({"model": "hyperbolic", "points": ["infinity"]})");
  EXPECT_THROW(with_line_diagnostics("", inf, [](const Json& d) { return point_list_from_json<Hyperbolic>(d); }),
               InputError);
}

TEST(RegionJson, RoundTripAllKinds) {
  const auto poly = Region<Hyperbolic>::polygon(hull<Hyperbolic>({HPoint(0.1), HPoint(0.2, 0.5), HPoint(-0.3, 0.1)}));
  const auto disk = Region<Hyperbolic>::oracle(Oracle<Hyperbolic>::disk(HPoint(0.1, 0.1), 0.8));
  const auto half = Region<Hyperbolic>::oracle(Oracle<Hyperbolic>::half_plane(Vec3{-1.25, 0.0, 1.0}, HPoint(0.0), 4));
  const auto dil = dilate_region(poly, Warp<Hyperbolic>(HPoint(0.0), 1.5, 2.0));
  Rng rng(Seed{61});
  for (const auto* r : {&poly, &disk, &half, &dil}) {
    const Json j = region_to_json(*r);
    const auto back = region_from_json<Hyperbolic>(Json::parse(j.dump()));
    EXPECT_EQ(region_to_json(back).dump(), j.dump());
    for (int i = 0; i < 200; ++i) {
      const HPoint p(std::polar(0.9 * rng.uniform(), rng.uniform(0, 2 * kPi)));
      ASSERT_EQ(r->escape(p), back.escape(p));
    }
  }
}

TEST(RegionJson, Errors) {
  EXPECT_THROW(region_from_json<Hyperbolic>(Json::parse(R"({"model": "hyperbolic", "kind": "blob"})")),
               detail::SchemaError);
  EXPECT_THROW(region_from_json<Hyperbolic>(
                   Json::parse(R"({"model": "hyperbolic", "kind": "disk", "center": [0, 0], "radius": -1})")),
               detail::SchemaError);
  EXPECT_THROW(region_from_json<Spherical>(Json::parse(R"({"model": "spherical", "kind": "polygon",
                 "vertices": [[1, 0], [-1, 0]]})")),
               detail::SchemaError);
}

TEST(Files, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "geocvx_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(read_text_file(path), "second\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  EXPECT_THROW(read_text_file(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Svg, FigureOneIsDeterministicAndStyled) {
  const std::string a = plot_figure1(), b = plot_figure1();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("stroke-dasharray=\"2,4\""), std::string::npos);  // dotted hemisphere arc
  EXPECT_NE(a.find("#d62728"), std::string::npos);                   // dilated image
  EXPECT_NE(a.find("#2ca02c"), std::string::npos);                   // hull overlay
  EXPECT_NE(a.find("#ff7f0e"), std::string::npos);                   // witness
}

TEST(Svg, RegionPlotSplitsAtInfinity) {
  const auto r = Region<Spherical>::polygon(hull<Spherical>({SPoint(0.2), SPoint(3.0, 0.5), SPoint::infinity()}));
  const std::string svg = plot_region(r, std::optional<Warp<Spherical>>());
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_EQ(svg.find("nan"), std::string::npos);
}

}  // namespace
