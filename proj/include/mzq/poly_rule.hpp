#ifndef MZQ_POLY_RULE_HPP
#define MZQ_POLY_RULE_HPP

#include "mzq/mesh.hpp"
#include "mzq/tri_rule.hpp"

#include <vector>

namespace mzq {

// Quadrature at the mesh vertices: the weight of a vertex is one third of
// the total area of its incident triangles. Exact for constants and linear
// polynomials.
struct PolygonRule {
  Mesh mesh;
  std::vector<double> weights; // aligned with mesh.vertices()

  const std::vector<Point2>& points() const { return mesh.vertices(); }
};

PolygonRule polygon_weights(const Mesh& m);

double apply_polygon_rule(const PolygonRule& r, const Integrand& f);

// Worst relative error over {1, x, y} against the shoelace moments of the
// mesh boundary polygon.
double exactness_check_p1(const PolygonRule& r);

} // namespace mzq

#endif
