#ifndef MZQ_TEST_UTIL_HPP
#define MZQ_TEST_UTIL_HPP

#include "mzq/geometry.hpp"
#include "mzq/rng.hpp"

#include <cmath>

namespace mzq::testutil {

// Random non-degenerate triangle with a moderate shape parameter.
inline Triangle random_triangle(SplitMix64& rng, double scale = 1.0) {
  for (;;) {
    const Point2 a{scale * rng.next_symmetric(), scale * rng.next_symmetric()};
    const Point2 b{scale * rng.next_symmetric(), scale * rng.next_symmetric()};
    const Point2 c{scale * rng.next_symmetric(), scale * rng.next_symmetric()};
    const double area = std::fabs(signed_area(a, b, c));
    const double e1 = dist(a, b), e2 = dist(b, c), e3 = dist(c, a);
    const double longest = std::max({e1, e2, e3});
    if (area > 0.05 * longest * longest && longest > 0.1 * scale)
      return Triangle(a, b, c);
  }
}

inline Point2 random_point_in_triangle(const Triangle& t, SplitMix64& rng) {
  double b1 = 0.5 * (rng.next_symmetric() + 1.0);
  double b2 = 0.5 * (rng.next_symmetric() + 1.0);
  if (b1 + b2 > 1.0) {
    b1 = 1.0 - b1;
    b2 = 1.0 - b2;
  }
  return t.from_barycentric({b1, b2, 1.0 - b1 - b2});
}

inline Triangle equilateral(Point2 center, double side) {
  const double r = side / std::sqrt(3.0);
  const double angles[3] = {M_PI / 2.0, M_PI / 2.0 + 2.0 * M_PI / 3.0,
                            M_PI / 2.0 + 4.0 * M_PI / 3.0};
  return Triangle({center.x + r * std::cos(angles[0]), center.y + r * std::sin(angles[0])},
                  {center.x + r * std::cos(angles[1]), center.y + r * std::sin(angles[1])},
                  {center.x + r * std::cos(angles[2]), center.y + r * std::sin(angles[2])});
}

// Star-shaped simple polygon around a center: angles sorted, jittered radii.
inline Polygon random_polygon(SplitMix64& rng, int min_vertices = 5, int max_vertices = 12) {
  const int n = min_vertices +
                static_cast<int>((max_vertices - min_vertices + 1) * 0.5 *
                                 (rng.next_symmetric() + 1.0));
  std::vector<Point2> verts;
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * (i + 0.35 * rng.next_symmetric()) / n;
    const double radius = 1.0 + 0.45 * rng.next_symmetric();
    verts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return Polygon(std::move(verts));
}

} // namespace mzq::testutil

#include "mzq/mesh.hpp"

namespace mzq::testutil {

// Random polygon plus interior points sampled strictly inside, kept apart
// from each other and from the boundary.
inline ScatteredSet random_scattered_set(SplitMix64& rng, int interior_target) {
  const Polygon poly = random_polygon(rng);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Point2& p : poly.vertices()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double diag = std::hypot(xmax - xmin, ymax - ymin);
  const double min_gap = 0.3 * diag / std::sqrt(interior_target + 4.0);
  std::vector<Point2> interior;
  int attempts = 0;
  while (static_cast<int>(interior.size()) < interior_target && attempts < 20000) {
    ++attempts;
    const Point2 cand{xmin + (xmax - xmin) * 0.5 * (rng.next_symmetric() + 1.0),
                      ymin + (ymax - ymin) * 0.5 * (rng.next_symmetric() + 1.0)};
    if (poly.locate(cand) != Polygon::Location::Inside) continue;
    bool clear = true;
    for (const Point2& q : poly.vertices())
      if (dist(cand, q) < min_gap) clear = false;
    for (const Point2& q : interior)
      if (dist(cand, q) < min_gap) clear = false;
    // Keep a small margin from every boundary edge.
    const auto& v = poly.vertices();
    for (std::size_t i = 0; clear && i < v.size(); ++i) {
      const Point2 a = v[i], b = v[(i + 1) % v.size()];
      const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
      double t = ((cand.x - a.x) * (b.x - a.x) + (cand.y - a.y) * (b.y - a.y)) / len2;
      t = std::min(1.0, std::max(0.0, t));
      const Point2 proj{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (dist(cand, proj) < 0.02 * diag) clear = false;
    }
    if (clear) interior.push_back(cand);
  }
  return ScatteredSet(poly, std::move(interior));
}

} // namespace mzq::testutil

#endif
