#include "mzq/geometry.hpp"

#include "mzq/error.hpp"
#include "mzq/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mzq {

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double signed_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

namespace {

void require_finite(Point2 p, const char* who) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw Error("DegenerateInput", std::string(who) + ": non-finite coordinate");
}

} // namespace

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {
  require_finite(a, "Triangle");
  require_finite(b, "Triangle");
  require_finite(c, "Triangle");
  const double e1 = dist(a, b);
  const double e2 = dist(b, c);
  const double e3 = dist(c, a);
  longest_edge_ = std::max({e1, e2, e3});
  double sa = signed_area(a, b, c);
  if (std::fabs(sa) <= 1e-14 * longest_edge_ * longest_edge_)
    throw Error("DegenerateTriangle", "signed area too small for triangle scale");
  if (sa < 0) {
    std::swap(v_[1], v_[2]);
    sa = -sa;
  }
  area_ = sa;
  inradius_ = area_ / (0.5 * (e1 + e2 + e3));
  shape_param_ = longest_edge_ / inradius_;
}

Barycentric Triangle::barycentric(Point2 p) const {
  // Cramer's rule on the 2x2 system obtained by eliminating b3 = 1 - b1 - b2.
  const Point2 r1 = v_[0] - v_[2];
  const Point2 r2 = v_[1] - v_[2];
  const Point2 rp = p - v_[2];
  const double det = r1.x * r2.y - r1.y * r2.x; // = 2 * area, nonzero
  Barycentric b;
  b.b1 = (rp.x * r2.y - rp.y * r2.x) / det;
  b.b2 = (r1.x * rp.y - r1.y * rp.x) / det;
  b.b3 = 1.0 - b.b1 - b.b2;
  return b;
}

Point2 Triangle::from_barycentric(const Barycentric& b) const {
  return b.b1 * v_[0] + b.b2 * v_[1] + b.b3 * v_[2];
}

bool Triangle::contains(Point2 p, double tol) const {
  const Barycentric b = barycentric(p);
  return b.b1 >= -tol && b.b2 >= -tol && b.b3 >= -tol;
}

namespace {

double shoelace(const std::vector<Point2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

} // namespace

Polygon::Polygon(std::vector<Point2> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3)
    throw Error("DegenerateInput", "polygon needs at least 3 vertices");
  for (const Point2& p : v_) require_finite(p, "Polygon");

  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = v_[i];
    const Point2& q = v_[(i + 1) % n];
    if (p == q)
      throw Error("DegenerateInput", "repeated consecutive polygon vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (orient2d(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]) == 0)
      throw Error("DegenerateInput", "three consecutive polygon vertices are collinear");
  }

  // Simplicity: non-adjacent edges may not meet at all; adjacent edges meet
  // only at their shared vertex. O(n^2) pair sweep.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v_[i];
    const Point2 b = v_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 c = v_[j];
      const Point2 d = v_[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Consecutive edges share one endpoint; any further contact means the
        // loop folds back on itself.
        const Point2 shared = (j == i + 1) ? b : a;
        const Point2 tip1 = (j == i + 1) ? a : b;
        const Point2 tip2 = (j == i + 1) ? d : c;
        if (on_segment(c, d, tip1) || on_segment(a, b, tip2) ||
            (tip1 == tip2 && !(tip1 == shared)))
          throw Error("NotSimple", "adjacent polygon edges overlap");
      } else if (segments_intersect(a, b, c, d)) {
        throw Error("NotSimple", "polygon edges intersect");
      }
    }
  }

  double sa = shoelace(v_);
  if (sa < 0) {
    std::reverse(v_.begin(), v_.end());
    sa = -sa;
  }
  area_ = sa;
}

std::array<double, 3> Polygon::moments() const {
  double m0 = 0.0, mx = 0.0, my = 0.0;
  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = v_[i];
    const Point2& q = v_[(i + 1) % n];
    const double cr = p.x * q.y - q.x * p.y;
    m0 += cr;
    mx += (p.x + q.x) * cr;
    my += (p.y + q.y) * cr;
  }
  return {0.5 * m0, mx / 6.0, my / 6.0};
}

Polygon::Location Polygon::locate(Point2 p) const {
  const std::size_t n = v_.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v_[i];
    const Point2 b = v_[(i + 1) % n];
    if (on_segment(a, b, p)) return Location::Boundary;
    if (a.y <= p.y) {
      if (b.y > p.y && orient2d(a, b, p) > 0) ++winding;
    } else {
      if (b.y <= p.y && orient2d(a, b, p) < 0) --winding;
    }
  }
  return winding != 0 ? Location::Inside : Location::Outside;
}

double polygon_area(const Polygon& poly) { return poly.area(); }

} // namespace mzq
