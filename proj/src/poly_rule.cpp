#include "mzq/poly_rule.hpp"

#include "mzq/error.hpp"

#include <cmath>
#include <sstream>

namespace mzq {

PolygonRule polygon_weights(const Mesh& m) {
  std::vector<double> weights(m.vertices().size(), 0.0);
  for (std::size_t n = 0; n < m.triangles().size(); ++n) {
    const double third = m.triangle(n).area() / 3.0;
    for (int v : m.triangles()[n]) weights[static_cast<std::size_t>(v)] += third;
  }
  return PolygonRule{m, std::move(weights)};
}

double apply_polygon_rule(const PolygonRule& r, const Integrand& f) {
  const auto& pts = r.mesh.vertices();
  double sum = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double v = f(pts[j]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand not finite at (" << pts[j].x << ", " << pts[j].y << ")";
      throw Error("NonFiniteSample", msg.str());
    }
    sum += r.weights[j] * v;
  }
  return sum;
}

double exactness_check_p1(const PolygonRule& r) {
  const std::array<double, 3> exact = r.mesh.boundary().moments();
  const auto& pts = r.mesh.vertices();
  double quad0 = 0.0, quadx = 0.0, quady = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    quad0 += r.weights[j];
    quadx += r.weights[j] * pts[j].x;
    quady += r.weights[j] * pts[j].y;
  }
  double worst = 0.0;
  const double quads[3] = {quad0, quadx, quady};
  for (int k = 0; k < 3; ++k) {
    const double scale = std::max(std::fabs(exact[static_cast<std::size_t>(k)]),
                                  exact[0]); // area as fallback scale
    worst = std::max(worst,
                     std::fabs(quads[k] - exact[static_cast<std::size_t>(k)]) / scale);
  }
  return worst;
}

} // namespace mzq
