#include "mzq/io.hpp"

#include "mzq/error.hpp"

#include <fstream>

namespace mzq::io {

json point_list_to_json(const std::vector<Point2>& pts) {
  json arr = json::array();
  for (const Point2& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::vector<Point2> point_list_from_json(const json& j) {
  if (!j.is_array()) throw Error("DegenerateInput", "expected an array of [x, y] pairs");
  std::vector<Point2> pts;
  pts.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw Error("DegenerateInput", "expected [x, y] pair");
    pts.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return pts;
}

Polygon polygon_from_json(const json& j) {
  if (!j.contains("vertices"))
    throw Error("DegenerateInput", "polygon JSON needs a \"vertices\" array");
  return Polygon(point_list_from_json(j["vertices"]));
}

json polygon_to_json(const Polygon& p) {
  return json{{"vertices", point_list_to_json(p.vertices())}};
}

ScatteredSet scattered_from_json(const json& j) {
  if (!j.contains("polygon"))
    throw Error("DegenerateInput", "scattered-point JSON needs a \"polygon\" array");
  Polygon poly(point_list_from_json(j["polygon"]));
  std::vector<Point2> interior;
  if (j.contains("interior")) interior = point_list_from_json(j["interior"]);
  return ScatteredSet(std::move(poly), std::move(interior));
}

json scattered_to_json(const ScatteredSet& s) {
  return json{{"polygon", point_list_to_json(s.polygon().vertices())},
              {"interior", point_list_to_json(s.interior())}};
}

Mesh mesh_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("triangles"))
    throw Error("DegenerateInput", "mesh JSON needs \"vertices\" and \"triangles\"");
  std::vector<Point2> verts = point_list_from_json(j["vertices"]);
  std::vector<std::array<int, 3>> tris;
  for (const json& e : j["triangles"]) {
    if (!e.is_array() || e.size() != 3)
      throw Error("DegenerateInput", "expected [a, b, c] triangle");
    tris.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return Mesh(std::move(verts), std::move(tris));
}

json mesh_to_json(const Mesh& m) {
  json tris = json::array();
  for (const auto& t : m.triangles()) tris.push_back({t[0], t[1], t[2]});
  return json{{"vertices", point_list_to_json(m.vertices())}, {"triangles", tris}};
}

json triangle_rule_to_json(const TriangleRule& r) {
  return json{{"degree", r.degree},
              {"points", point_list_to_json(r.points)},
              {"weights", r.weights}};
}

json polygon_rule_to_json(const PolygonRule& r) {
  return json{{"points", point_list_to_json(r.points())}, {"weights", r.weights}};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("DegenerateInput", "cannot open " + path.string());
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("DegenerateInput", "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("DegenerateInput", "cannot write " + path.string());
  out << text;
}

json manifest_to_json(const RunManifest& m) {
  json j{{"command", m.command},
         {"parameters", m.parameters},
         {"version", m.version},
         {"timestamp", m.timestamp},
         {"outputs", m.outputs}};
  if (m.has_seed) j["seed"] = m.seed;
  return j;
}

} // namespace mzq::io
