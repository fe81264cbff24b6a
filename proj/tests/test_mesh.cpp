#include "mzq/mesh.hpp"

#include "mzq/error.hpp"
#include "mzq/predicates.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace mzq;

namespace {

// Every polygon boundary edge must appear as a triangle edge.
bool boundary_edges_present(const Mesh& m, const Polygon& poly) {
  std::set<std::pair<int, int>> edges;
  for (const auto& t : m.triangles())
    for (int i = 0; i < 3; ++i) {
      const int a = t[static_cast<std::size_t>(i)];
      const int b = t[static_cast<std::size_t>((i + 1) % 3)];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  const int nb = static_cast<int>(poly.size());
  for (int i = 0; i < nb; ++i)
    if (!edges.count({std::min(i, (i + 1) % nb), std::max(i, (i + 1) % nb)})) return false;
  return true;
}

// Empty-circumcircle spot check for non-boundary edges.
bool delaunay_except_constrained(const Mesh& m, const Polygon& poly) {
  std::map<std::pair<int, int>, std::vector<std::size_t>> edge_tris;
  for (std::size_t n = 0; n < m.triangles().size(); ++n) {
    const auto& t = m.triangles()[n];
    for (int i = 0; i < 3; ++i) {
      const int a = t[static_cast<std::size_t>(i)];
      const int b = t[static_cast<std::size_t>((i + 1) % 3)];
      edge_tris[{std::min(a, b), std::max(a, b)}].push_back(n);
    }
  }
  std::set<std::pair<int, int>> constrained;
  const int nb = static_cast<int>(poly.size());
  for (int i = 0; i < nb; ++i)
    constrained.insert({std::min(i, (i + 1) % nb), std::max(i, (i + 1) % nb)});

  for (const auto& [edge, tris] : edge_tris) {
    if (tris.size() != 2 || constrained.count(edge)) continue;
    const auto& ta = m.triangles()[tris[0]];
    const auto& tb = m.triangles()[tris[1]];
    int apex = -1;
    for (int v : tb)
      if (v != edge.first && v != edge.second) apex = v;
    const auto& verts = m.vertices();
    if (incircle(verts[static_cast<std::size_t>(ta[0])], verts[static_cast<std::size_t>(ta[1])],
                 verts[static_cast<std::size_t>(ta[2])],
                 verts[static_cast<std::size_t>(apex)]) > 0)
      return false;
  }
  return true;
}

} // namespace

TEST_SUITE_BEGIN("mesh");

TEST_CASE("unit square without interior points") {
  const ScatteredSet s(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {});
  const Mesh m = triangulate(s);
  CHECK(m.count() == 2);
  CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(is_conforming(m));
  CHECK(m.vertices().size() == 4);
}

TEST_CASE("triangle polygon with centroid interior point") {
  const Polygon poly({{0, 0}, {3, 0}, {0, 3}});
  const ScatteredSet s(poly, {{1, 1}});
  const Mesh m = triangulate(s);
  CHECK(m.count() == 3);
  CHECK(m.total_area() == doctest::Approx(4.5).epsilon(1e-13));
  // Every triangle uses the centroid (index 3).
  for (const auto& t : m.triangles())
    CHECK(std::count(t.begin(), t.end(), 3) == 1);
}

TEST_CASE("convex polygons triangulate into n-2 triangles") {
  SplitMix64 rng(51);
  for (int n = 3; n <= 12; ++n) {
    std::vector<Point2> verts;
    for (int i = 0; i < n; ++i) {
      const double a = 2.0 * M_PI * i / n + 0.1;
      verts.push_back({std::cos(a), std::sin(a)});
    }
    const Mesh m = triangulate(ScatteredSet(Polygon(verts), {}));
    CHECK(m.count() == n - 2);
    CHECK(is_conforming(m));
  }
}

TEST_CASE("scattered-set validation errors") {
  const Polygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK_THROWS_WITH_AS(ScatteredSet(square, {{0.5, 0.0}}),
                       doctest::Contains("PointOnBoundary"), Error);
  CHECK_THROWS_WITH_AS(ScatteredSet(square, {{2.0, 0.5}}),
                       doctest::Contains("PointOutsidePolygon"), Error);
  CHECK_THROWS_WITH_AS(ScatteredSet(square, {{0.5, 0.5}, {0.5, 0.5}}),
                       doctest::Contains("DuplicatePoint"), Error);
}

TEST_CASE("non-convex polygons: exterior removed, boundary preserved") {
  const Polygon ell({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const Mesh m = triangulate(ScatteredSet(ell, {{0.5, 0.5}, {0.4, 1.5}}));
  CHECK(m.total_area() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(is_conforming(m));
  CHECK(boundary_edges_present(m, ell));

  // U-shape with a deep notch.
  const Polygon u({{0, 0}, {5, 0}, {5, 3}, {4, 3}, {4, 1}, {1, 1}, {1, 3}, {0, 3}});
  const Mesh mu = triangulate(ScatteredSet(u, {{0.5, 2.0}, {2.5, 0.5}, {4.5, 2.0}}));
  CHECK(mu.total_area() == doctest::Approx(u.area()).epsilon(1e-12));
  CHECK(is_conforming(mu));
  CHECK(boundary_edges_present(mu, u));
}

TEST_CASE("random scattered sets: conformity, areas, vertex preservation") {
  SplitMix64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const ScatteredSet s = testutil::random_scattered_set(rng, 5 + trial * 4);
    const Mesh m = triangulate(s);
    CHECK(m.total_area() == doctest::Approx(s.polygon().area()).epsilon(1e-10));
    CHECK(is_conforming(m));
    CHECK(boundary_edges_present(m, s.polygon()));
    CHECK(delaunay_except_constrained(m, s.polygon()));
    // Exactly the input points, in input order, no Steiner points.
    const auto pts = s.all_points();
    REQUIRE(m.vertices().size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(m.vertices()[i].x == pts[i].x);
      CHECK(m.vertices()[i].y == pts[i].y);
    }
  }
}

TEST_CASE("triangulation is deterministic") {
  SplitMix64 rng(53);
  const ScatteredSet s = testutil::random_scattered_set(rng, 20);
  const Mesh a = triangulate(s);
  const Mesh b = triangulate(s);
  REQUIRE(a.triangles().size() == b.triangles().size());
  for (std::size_t n = 0; n < a.triangles().size(); ++n)
    CHECK(a.triangles()[n] == b.triangles()[n]);
}

TEST_CASE("cocircular points are handled deterministically") {
  // Square corners plus an inner square around the center: many cocircular
  // quadruples.
  const Polygon square({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const std::vector<Point2> interior = {
      {1.0, 1.0}, {0.7, 0.7}, {1.3, 0.7}, {1.3, 1.3}, {0.7, 1.3}};
  const Mesh m = triangulate(ScatteredSet(square, interior));
  CHECK(m.total_area() == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(m.count() == 2 * 9 - 2 - 4);
  CHECK(is_conforming(m));
  const Mesh again = triangulate(ScatteredSet(square, interior));
  CHECK(m.triangles() == again.triangles());
}

TEST_CASE("mesh metrics") {
  const Mesh m = triangulate(ScatteredSet(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {}));
  const MeshMetrics metrics = mesh_metrics(m);
  CHECK(metrics.size == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(metrics.count == 2);
  CHECK(metrics.gamma >= 2.0 * std::sqrt(3.0) - 1e-12);

  SplitMix64 rng(54);
  for (int trial = 0; trial < 5; ++trial) {
    const Mesh r = triangulate(testutil::random_scattered_set(rng, 10));
    CHECK(mesh_metrics(r).gamma >= 2.0 * std::sqrt(3.0) - 1e-12);
  }
}

TEST_CASE("uniform refinement") {
  const Mesh base = triangulate(ScatteredSet(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {}));

  const Mesh same = refine_uniform(base, 0);
  CHECK(same.count() == base.count());
  CHECK(same.vertices().size() == base.vertices().size());

  const Mesh one = refine_uniform(base, 1);
  CHECK(one.count() == 8);
  CHECK(one.size() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
  CHECK(one.total_area() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(is_conforming(one));

  const Mesh two = refine_uniform(base, 2);
  CHECK(two.count() == 32);
  CHECK(two.total_area() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(is_conforming(two));

  // Children are similar to their parents: the shape parameter multiset of
  // every refined level matches the base (each triangle spawns 4 copies).
  SplitMix64 rng(55);
  const Mesh irregular = triangulate(testutil::random_scattered_set(rng, 8));
  const Mesh refined = refine_uniform(irregular, 1);
  for (int n = 0; n < irregular.count(); ++n) {
    const double parent = irregular.triangle(static_cast<std::size_t>(n)).shape_param();
    for (int c = 0; c < 4; ++c) {
      const double child =
          refined.triangle(static_cast<std::size_t>(4 * n + c)).shape_param();
      CHECK(child == doctest::Approx(parent).epsilon(1e-9));
    }
  }
  CHECK(refined.total_area() ==
        doctest::Approx(irregular.total_area()).epsilon(1e-12));
}

TEST_CASE("triangle-count and size bounds stay balanced under refinement") {
  // #tri^(1-1/p) * size^2 / size^(2/p) should stay level-to-level bounded.
  SplitMix64 rng(56);
  const Mesh base = triangulate(testutil::random_scattered_set(rng, 6));
  for (const double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    double prev = 0.0;
    Mesh m = base;
    for (int level = 0; level <= 4; ++level) {
      if (level > 0) m = refine_uniform(m, 1);
      const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
      const double ratio = std::pow(static_cast<double>(m.count()), 1.0 - inv_p) *
                           std::pow(m.size(), 2.0 - 2.0 * inv_p);
      if (level > 0) CHECK(ratio <= 2.0 * prev);
      prev = ratio;
    }
  }
}

TEST_CASE("boundary extraction from a raw mesh") {
  const Polygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Mesh m = refine_uniform(triangulate(ScatteredSet(square, {})), 2);
  const Polygon extracted = extract_boundary(m.vertices(), m.triangles());
  CHECK(extracted.area() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(extracted.size() == 4); // collinear refinement points merged away

  // Raw-constructed mesh reuses extraction for its boundary.
  const Mesh raw(m.vertices(), m.triangles());
  CHECK(raw.boundary().area() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("mesh constructor validation") {
  std::vector<Point2> verts = {{0, 0}, {1, 0}, {0, 1}, {5, 5}};
  CHECK_THROWS_AS(Mesh(verts, {{0, 1, 2}}), Error); // vertex 3 unused
  CHECK_THROWS_AS(Mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 3}}), Error);
}

TEST_SUITE_END();
