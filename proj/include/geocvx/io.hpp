#pragma once

// JSON encoding of points, point lists and regions, with line-located
// diagnostics for bad input, plus atomic file output.
//
// Points are [re, im]; the spherical point at infinity is the string
// "infinity". Region documents mirror the Region variants:
//   {"model": m, "kind": "polygon",   "vertices": [p, ...]}
//   {"model": m, "kind": "disk",      "center": p, "radius": r}
//   {"model": m, "kind": "halfplane", "normal": [n1, n2, n3], "inner": p, "bound": b}
//   {"model": m, "kind": "dilated",   "base": region, "center": p, "k": k}   (or "k1", "k2")

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "geocvx/convexity.hpp"
#include "geocvx/error.hpp"
#include "geocvx/geometry.hpp"

namespace geocvx {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Locating values in the source text

/// One step of a path into a JSON document: an object key or an array index.
using JsonStep = std::variant<std::string, std::size_t>;
using JsonPath = std::vector<JsonStep>;

namespace detail {

/// Schema violation at `path`; turned into an InputError with a line number
/// once the source text is known.
struct SchemaError {
  JsonPath path;
  std::string message;
};

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\n' || peek() == '\r' || peek() == '\t')) ++pos_;
  }

  std::string read_string() {
    std::string out;
    if (peek() != '"') return out;
    ++pos_;
    while (!done() && peek() != '"') {
      if (peek() == '\\') {
        ++pos_;
        if (done()) break;
      }
      out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  void skip_value() {
    skip_ws();
    if (peek() == '"') {
      read_string();
      return;
    }
    if (peek() == '{' || peek() == '[') {
      int depth = 0;
      while (!done()) {
        const char c = peek();
        if (c == '"') {
          read_string();
          continue;
        }
        ++pos_;
        if (c == '{' || c == '[') ++depth;
        if ((c == '}' || c == ']') && --depth == 0) return;
      }
      return;
    }
    while (!done() && peek() != ',' && peek() != '}' && peek() != ']') ++pos_;
  }

  /// Moves to the start of the value at `step` inside the container at the cursor.
  bool enter(const JsonStep& step) {
    skip_ws();
    if (const auto* key = std::get_if<std::string>(&step)) {
      if (peek() != '{') return false;
      ++pos_;
      while (true) {
        skip_ws();
        if (peek() != '"') return false;
        const std::string k = read_string();
        skip_ws();
        if (peek() != ':') return false;
        ++pos_;
        skip_ws();
        if (k == *key) return true;
        skip_value();
        skip_ws();
        if (peek() != ',') return false;
        ++pos_;
      }
    }
    const std::size_t index = std::get<std::size_t>(step);
    if (peek() != '[') return false;
    ++pos_;
    for (std::size_t i = 0;; ++i) {
      skip_ws();
      if (peek() == ']') return false;
      if (i == index) return true;
      skip_value();
      skip_ws();
      if (peek() != ',') return false;
      ++pos_;
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

inline std::string path_string(const JsonPath& path) {
  std::string s;
  for (const auto& step : path) {
    if (const auto* k = std::get_if<std::string>(&step)) {
      s += "/" + *k;
    } else {
      s += "/" + std::to_string(std::get<std::size_t>(step));
    }
  }
  return s.empty() ? "/" : s;
}

inline JsonPath extend(JsonPath path, JsonStep step) {
  path.push_back(std::move(step));
  return path;
}

[[noreturn]] inline void schema_fail(const JsonPath& path, std::string message) {
  throw SchemaError{path, std::move(message)};
}

}  // namespace detail

/// 1-based line of the value at `path` in `text` (0 if it cannot be found).
inline std::size_t locate_line(std::string_view text, const JsonPath& path) {
  detail::TextCursor cur(text);
  for (const auto& step : path) {
    if (!cur.enter(step)) return 0;
  }
  cur.skip_ws();
  return detail::line_of_offset(text, cur.pos());
}

/// Parses JSON text; syntax errors become InputError carrying the line.
inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw InputError(std::string("JSON syntax error: ") + e.what(), detail::line_of_offset(text, offset));
  }
}

/// Runs `build(doc)` and attaches line numbers to any schema violation.
template <class F>
auto with_line_diagnostics(std::string_view text, const Json& doc, F&& build) -> decltype(build(doc)) {
  try {
    return build(doc);
  } catch (const detail::SchemaError& e) {
    throw InputError(e.message + " (at " + detail::path_string(e.path) + ")", locate_line(text, e.path));
  }
}

// ---------------------------------------------------------------------------
// Points

inline Json point_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }
inline Json point_to_json(HPoint p) { return point_to_json(p.z()); }
inline Json point_to_json(const SPoint& p) { return p.is_infinity() ? Json("infinity") : point_to_json(p.value()); }

namespace detail {

inline double number_at(const Json& j, const JsonPath& path) {
  if (!j.is_number()) schema_fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_fail(path, "number must be finite");
  return v;
}

inline Complex complex_at(const Json& j, const JsonPath& path) {
  if (!j.is_array() || j.size() != 2) schema_fail(path, "point must be [re, im]");
  return {number_at(j[0], extend(path, std::size_t{0})), number_at(j[1], extend(path, std::size_t{1}))};
}

}  // namespace detail

template <class G>
typename G::Point point_from_json(const Json& j, const JsonPath& path = {}) {
  if constexpr (G::model == Model::spherical) {
    if (j.is_string()) {
      if (j.get<std::string>() == "infinity") return SPoint::infinity();
      detail::schema_fail(path, "the only string point is \"infinity\"");
    }
  }
  const Complex z = detail::complex_at(j, path);
  try {
    return G::make(z);
  } catch (const Error& e) {
    detail::schema_fail(path, e.what());
  }
}

inline Model model_from_json(const Json& doc, const JsonPath& path = {}) {
  if (!doc.is_object()) detail::schema_fail(path, "expected an object");
  const auto it = doc.find("model");
  if (it == doc.end() || !it->is_string()) detail::schema_fail(path, "missing string field \"model\"");
  try {
    return parse_model(it->get<std::string>());
  } catch (const Error& e) {
    detail::schema_fail(detail::extend(path, std::string("model")), e.what());
  }
}

template <class G>
std::vector<typename G::Point> points_array_from_json(const Json& arr, const JsonPath& path) {
  if (!arr.is_array()) detail::schema_fail(path, "expected an array of points");
  std::vector<typename G::Point> pts;
  for (std::size_t i = 0; i < arr.size(); ++i) pts.push_back(point_from_json<G>(arr[i], detail::extend(path, i)));
  return pts;
}

/// Point-list document {"model": ..., "points": [...]}.
template <class G>
std::vector<typename G::Point> point_list_from_json(const Json& doc) {
  const Model m = model_from_json(doc);
  if (m != G::model) detail::schema_fail({"model"}, "model mismatch");
  if (!doc.contains("points")) detail::schema_fail({}, "missing field \"points\"");
  return points_array_from_json<G>(doc["points"], {"points"});
}

template <class G>
Json point_list_to_json(std::span<const typename G::Point> pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return Json{{"model", model_name(G::model)}, {"points", arr}};
}

// ---------------------------------------------------------------------------
// Regions

inline Json vec3_to_json(Vec3 v) { return Json::array({v.x, v.y, v.z}); }

template <class G>
Json region_to_json(const Region<G>& r) {
  Json j;
  j["model"] = model_name(G::model);
  if (r.is_polygon()) {
    j["kind"] = "polygon";
    Json verts = Json::array();
    for (const auto& v : r.as_polygon().vertices()) verts.push_back(point_to_json(v));
    j["vertices"] = verts;
  } else if (r.is_oracle()) {
    const auto& o = r.as_oracle();
    if (const auto* d = std::get_if<typename Oracle<G>::Disk>(&o.shape)) {
      j["kind"] = "disk";
      j["center"] = point_to_json(d->center);
      j["radius"] = d->radius;
    } else if (const auto* h = std::get_if<typename Oracle<G>::HalfPlane>(&o.shape)) {
      j["kind"] = "halfplane";
      j["normal"] = vec3_to_json(h->normal);
      j["inner"] = point_to_json(o.center);
      j["bound"] = o.bound;
    } else {
      throw DomainError("region_to_json: custom oracle regions are not serializable");
    }
  } else {
    const auto& d = r.as_dilated();
    j["kind"] = "dilated";
    j["base"] = region_to_json(d.base);
    j["center"] = point_to_json(d.warp.center);
    if (d.warp.symmetric()) {
      j["k"] = d.warp.k1;
    } else {
      j["k1"] = d.warp.k1;
      j["k2"] = d.warp.k2;
    }
  }
  return j;
}

namespace detail {

inline const Json& field(const Json& doc, const char* key, const JsonPath& path) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline double positive_at(const Json& doc, const char* key, const JsonPath& path) {
  const double v = number_at(field(doc, key, path), extend(path, std::string(key)));
  if (!(v > 0)) schema_fail(extend(path, std::string(key)), std::string(key) + " must be positive");
  return v;
}

template <class G>
Region<G> region_from_json_at(const Json& doc, const JsonPath& path, const Tolerances& tol) {
  const Model m = model_from_json(doc, path);
  if (m != G::model) schema_fail(extend(path, std::string("model")), "model mismatch");
  const Json& kind_j = field(doc, "kind", path);
  if (!kind_j.is_string()) schema_fail(extend(path, std::string("kind")), "kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "polygon") {
    const JsonPath vp = extend(path, std::string("vertices"));
    const auto pts = points_array_from_json<G>(field(doc, "vertices", path), vp);
    if (pts.empty()) schema_fail(vp, "polygon needs at least one vertex");
    try {
      return Region<G>::polygon(hull<G>(std::span<const typename G::Point>(pts), tol));
    } catch (const DomainError& e) {
      schema_fail(vp, e.what());
    }
  }
  if (kind == "disk") {
    const auto c = point_from_json<G>(field(doc, "center", path), extend(path, std::string("center")));
    return Region<G>::oracle(Oracle<G>::disk(c, positive_at(doc, "radius", path)));
  }
  if (kind == "halfplane") {
    const JsonPath np = extend(path, std::string("normal"));
    const Json& n = field(doc, "normal", path);
    if (!n.is_array() || n.size() != 3) schema_fail(np, "normal must be [n1, n2, n3]");
    const Vec3 normal{number_at(n[0], extend(np, std::size_t{0})), number_at(n[1], extend(np, std::size_t{1})),
                      number_at(n[2], extend(np, std::size_t{2}))};
    const auto inner = point_from_json<G>(field(doc, "inner", path), extend(path, std::string("inner")));
    return Region<G>::oracle(Oracle<G>::half_plane(normal, inner, positive_at(doc, "bound", path)));
  }
  if (kind == "dilated") {
    auto base = region_from_json_at<G>(field(doc, "base", path), extend(path, std::string("base")), tol);
    const auto c = point_from_json<G>(field(doc, "center", path), extend(path, std::string("center")));
    double k1 = 0, k2 = 0;
    if (doc.contains("k")) {
      k1 = k2 = positive_at(doc, "k", path);
    } else {
      k1 = positive_at(doc, "k1", path);
      k2 = positive_at(doc, "k2", path);
    }
    return dilate_region(base, Warp<G>(c, k1, k2), tol);
  }
  schema_fail(extend(path, std::string("kind")), "unknown region kind '" + kind + "'");
}

}  // namespace detail

template <class G>
Region<G> region_from_json(const Json& doc, const Tolerances& tol = default_tolerances()) {
  return detail::region_from_json_at<G>(doc, {}, tol);
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes `content` to a sibling temp file and renames it over `path`.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace geocvx
