#ifndef MZQ_GEOMETRY_HPP
#define MZQ_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace mzq {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

double dist(Point2 a, Point2 b);

// Twice-signed-area convention is avoided throughout: this returns the
// actual signed area, positive for counter-clockwise (a, b, c).
double signed_area(Point2 a, Point2 b, Point2 c);

struct Barycentric {
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

// Non-degenerate triangle, normalized to counter-clockwise orientation on
// construction. Derived metrics are computed once and cached.
class Triangle {
public:
  Triangle(Point2 a, Point2 b, Point2 c); // throws Error("DegenerateTriangle")

  const Point2& v1() const { return v_[0]; }
  const Point2& v2() const { return v_[1]; }
  const Point2& v3() const { return v_[2]; }
  const std::array<Point2, 3>& vertices() const { return v_; }

  double area() const { return area_; }
  double longest_edge() const { return longest_edge_; }
  double inradius() const { return inradius_; }
  double shape_param() const { return shape_param_; }

  Barycentric barycentric(Point2 p) const;
  Point2 from_barycentric(const Barycentric& b) const;

  // True if p lies in the closed triangle, up to `tol` in barycentric units.
  bool contains(Point2 p, double tol = 1e-12) const;

private:
  std::array<Point2, 3> v_;
  double area_;
  double longest_edge_;
  double inradius_;
  double shape_param_;
};

// Simple polygon, vertices normalized to counter-clockwise loop order.
// Rejects self-intersection, repeated consecutive vertices, and three
// collinear consecutive vertices.
class Polygon {
public:
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  double area() const { return area_; }

  // Shoelace moments over the enclosed region: {integral of 1, x, y}.
  std::array<double, 3> moments() const;

  enum class Location { Inside, Boundary, Outside };
  Location locate(Point2 p) const;
  bool contains(Point2 p) const { return locate(p) != Location::Outside; }

private:
  std::vector<Point2> v_;
  double area_;
};

double polygon_area(const Polygon& poly);

} // namespace mzq

#endif
