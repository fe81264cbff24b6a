#ifndef MZQ_IO_HPP
#define MZQ_IO_HPP

#include "mzq/mesh.hpp"
#include "mzq/poly_rule.hpp"
#include "mzq/tri_rule.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace mzq::io {

using nlohmann::json;

// File formats (all JSON):
//   polygon:   {"vertices": [[x,y], ...]}            loop order, no closing repeat
//   scattered: {"polygon": [[x,y],...], "interior": [[x,y],...]}
//   mesh:      {"vertices": [[x,y],...], "triangles": [[a,b,c],...]}  0-based CCW
//   tri rule:  {"degree": d, "points": [[x,y],...], "weights": [...]}
//   poly rule: {"points": [[x,y],...], "weights": [...]}

json point_list_to_json(const std::vector<Point2>& pts);
std::vector<Point2> point_list_from_json(const json& j);

Polygon polygon_from_json(const json& j);
json polygon_to_json(const Polygon& p);

ScatteredSet scattered_from_json(const json& j);
json scattered_to_json(const ScatteredSet& s);

Mesh mesh_from_json(const json& j);
json mesh_to_json(const Mesh& m);

json triangle_rule_to_json(const TriangleRule& r);
json polygon_rule_to_json(const PolygonRule& r);

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Run manifest written next to every CLI output: enough to re-run the
// command bit-identically (the timestamp field is informational).
struct RunManifest {
  std::string command;
  json parameters;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string version;
  std::string timestamp;
  std::vector<std::string> outputs;
};

json manifest_to_json(const RunManifest& m);

} // namespace mzq::io

#endif
