#pragma once

// Polygon JSON files ({"vertices": [[x, y], ...]}) and serialization of
// results. Numbers are written with 12 significant digits.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coneiso/cone.hpp"
#include "coneiso/errors.hpp"
#include "coneiso/geometry.hpp"
#include "coneiso/optimize.hpp"

namespace coneiso::io {

using json = nlohmann::ordered_json;

inline constexpr int kSignificantDigits = 12;

/// Decimal text with 12 significant digits.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, v);
  return buf;
}

/// The value that `format_number` text parses back to.
inline double round_to_output(double v) { return std::stod(format_number(v)); }

inline Polygon polygon_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices")) {
    throw Error(ErrorKind::MalformedInput, "expected an object with a \"vertices\" array");
  }
  const json& verts = doc.at("vertices");
  if (!verts.is_array()) throw Error(ErrorKind::MalformedInput, "\"vertices\" must be an array");
  std::vector<Vec2> pts;
  pts.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const json& v = verts[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw Error(ErrorKind::MalformedInput, "vertex " + std::to_string(i) + " must be a [x, y] number pair");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return Polygon(std::move(pts));
}

inline Polygon parse_polygon(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  return polygon_from_json(doc);
}

inline Polygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open polygon file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polygon(ss.str());
}

inline json polygon_to_json(const Polygon& poly) {
  json verts = json::array();
  for (const auto& p : poly.vertices()) verts.push_back({p.x, p.y});
  return json{{"vertices", verts}};
}

inline json number(double v) { return round_to_output(v); }

inline json point_json(const Vec2& p) { return json::array({number(p.x), number(p.y)}); }

inline json to_json(const IncircleResult& r) {
  return json{{"center", point_json(r.center)}, {"radius", number(r.radius)}};
}

inline json to_json(const ChebyshevResult& r) {
  return json{{"center", point_json(r.center)}, {"radius", number(r.radius)}};
}

inline json to_json(const CenterResult& r, const Polygon& poly) {
  json dist = json::array();
  for (double d : r.distance_profile.distances) dist.push_back(number(d));
  return json{{"center", point_json(r.center)},
              {"height", number(r.height)},
              {"boundary_area", number(r.boundary_area)},
              {"volume", number(cone_volume(poly, r.height))},
              {"ratio", number(isoperimetric_ratio(poly, Apex(r.center, r.height)))},
              {"gradient_norm", number(r.gradient_norm)},
              {"distances", dist},
              {"equal_angle_residual", number(equal_angle_residual(poly, r.center, r.height))},
              {"iterations", r.iterations},
              {"converged", r.converged}};
}

inline json to_json(const OptimalCone& r, const Polygon& poly) {
  const Apex apex(r.center, r.height);
  json out{{"center", point_json(r.center)},
           {"height", number(r.height)},
           {"ratio", number(r.ratio)},
           {"boundary_area", number(boundary_area(poly, apex))},
           {"volume", number(cone_volume(poly, r.height))}};
  if (r.height_over_inradius) out["height_over_inradius"] = number(*r.height_over_inradius);
  out["inner_solves"] = r.inner_results.size();
  out["converged"] = r.converged;
  return out;
}

inline constexpr const char* kSweepHeader = "h,center_x,center_y,boundary_area,volume,ratio,equal_angle_residual";

/// CSV rows with a header; failed entries keep their height and leave the
/// remaining fields empty.
inline std::string sweep_csv(const std::vector<SweepEntry>& entries) {
  std::string out = std::string(kSweepHeader) + "\r\n";
  for (const auto& e : entries) {
    out += format_number(e.height);
    if (e.result) {
      out += "," + format_number(e.result->center.x) + "," + format_number(e.result->center.y) + "," +
             format_number(e.result->boundary_area) + "," + format_number(e.volume) + "," +
             format_number(e.ratio) + "," + format_number(e.equal_angle_residual);
    } else {
      out += ",,,,,,";
    }
    out += "\r\n";
  }
  return out;
}

inline json sweep_json(const std::vector<SweepEntry>& entries, const Polygon& poly) {
  json rows = json::array();
  for (const auto& e : entries) {
    if (e.result) {
      rows.push_back(to_json(*e.result, poly));
    } else {
      rows.push_back(json{{"height", number(e.height)}, {"error", e.error}});
    }
  }
  return rows;
}

}  // namespace coneiso::io
