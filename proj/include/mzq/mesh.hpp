#ifndef MZQ_MESH_HPP
#define MZQ_MESH_HPP

#include "mzq/geometry.hpp"

#include <array>
#include <vector>

namespace mzq {

// Scattered quadrature points: a simple polygon plus points strictly inside
// it. The polygon vertices are part of the point set and come first.
class ScatteredSet {
public:
  ScatteredSet(Polygon polygon, std::vector<Point2> interior);

  const Polygon& polygon() const { return polygon_; }
  const std::vector<Point2>& interior() const { return interior_; }
  std::vector<Point2> all_points() const;
  std::size_t size() const { return polygon_.size() + interior_.size(); }

private:
  Polygon polygon_;
  std::vector<Point2> interior_;
};

// Conforming triangulation of a polygon. Vertices are exactly the scattered
// points that produced it (no Steiner points); triangles are CCW index
// triples into the vertex list.
class Mesh {
public:
  Mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles);
  Mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles,
       Polygon boundary);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
  const Polygon& boundary() const { return boundary_; }

  Triangle triangle(std::size_t n) const;

  int count() const { return static_cast<int>(tris_.size()); }
  double size() const { return size_; }   // longest edge over all triangles
  double gamma() const { return gamma_; } // size / inradius of smallest-area triangle
  double total_area() const { return total_area_; }

private:
  void compute_metrics();

  std::vector<Point2> vertices_;
  std::vector<std::array<int, 3>> tris_;
  Polygon boundary_;
  double size_ = 0.0;
  double gamma_ = 0.0;
  double total_area_ = 0.0;
};

struct MeshMetrics {
  double size = 0.0;
  int count = 0;
  double gamma = 0.0;
};

// Constrained Delaunay triangulation over exactly the scattered points:
// incremental insertion with exact predicates, polygon edges enforced by
// flips, exterior triangles removed by flood fill from the outside.
Mesh triangulate(const ScatteredSet& s);

MeshMetrics mesh_metrics(const Mesh& m);

// Splits every triangle into 4 congruent children via edge midpoints,
// `levels` times. Children are similar to their parent, so shape parameters
// are preserved and the mesh size halves per level.
Mesh refine_uniform(const Mesh& m, int levels);

// Exhaustive pairwise check that triangles meet only in nothing, a shared
// vertex, or a full shared edge.
bool is_conforming(const Mesh& m);

// Boundary loop of a mesh (unpaired edges chained, collinear runs merged).
Polygon extract_boundary(const std::vector<Point2>& vertices,
                         const std::vector<std::array<int, 3>>& triangles);

} // namespace mzq

#endif
