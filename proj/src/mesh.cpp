#include "mzq/mesh.hpp"

#include "mzq/error.hpp"
#include "mzq/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace mzq {

ScatteredSet::ScatteredSet(Polygon polygon, std::vector<Point2> interior)
    : polygon_(std::move(polygon)), interior_(std::move(interior)) {
  for (const Point2& p : interior_) {
    switch (polygon_.locate(p)) {
      case Polygon::Location::Boundary:
        throw Error("PointOnBoundary", "interior point lies on the polygon boundary");
      case Polygon::Location::Outside:
        throw Error("PointOutsidePolygon", "interior point lies outside the polygon");
      case Polygon::Location::Inside:
        break;
    }
  }
  const std::vector<Point2> pts = all_points();
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Point2& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double diag = std::hypot(xmax - xmin, ymax - ymin);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (dist(pts[i], pts[j]) <= 1e-12 * diag)
        throw Error("DuplicatePoint", "points " + std::to_string(i) + " and " +
                                          std::to_string(j) + " coincide");
}

std::vector<Point2> ScatteredSet::all_points() const {
  std::vector<Point2> pts = polygon_.vertices();
  pts.insert(pts.end(), interior_.begin(), interior_.end());
  return pts;
}

// --------------------------------------------------------------------------
// Incremental constrained Delaunay triangulation.

namespace {

struct Tri {
  std::array<int, 3> v{-1, -1, -1}; // CCW
  std::array<int, 3> n{-1, -1, -1}; // n[i] across the edge opposite v[i]
  bool alive = true;
};

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

class Triangulator {
public:
  Triangulator(std::vector<Point2> points, const std::vector<int>& boundary_loop)
      : pts_(std::move(points)), boundary_loop_(boundary_loop) {
    insert_all();
    enforce_constraints();
    restore_delaunay();
    remove_outside();
  }

  std::vector<std::array<int, 3>> inside_triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const Tri& t : tris_)
      if (t.alive) out.push_back(t.v);
    return out;
  }

private:
  std::vector<Point2> pts_; // real points; super-triangle appended
  std::vector<int> boundary_loop_;
  std::vector<Tri> tris_;
  std::set<EdgeKey> constrained_;
  int real_count_ = 0;

  Point2 point(int v) const { return pts_[static_cast<std::size_t>(v)]; }

  static int pos_of(const Tri& t, int v) {
    for (int i = 0; i < 3; ++i)
      if (t.v[static_cast<std::size_t>(i)] == v) return i;
    throw std::logic_error("vertex not in triangle");
  }

  void replace_neighbor(int tri, int old_nb, int new_nb) {
    if (tri < 0) return;
    Tri& t = tris_[static_cast<std::size_t>(tri)];
    for (int i = 0; i < 3; ++i)
      if (t.n[static_cast<std::size_t>(i)] == old_nb) {
        t.n[static_cast<std::size_t>(i)] = new_nb;
        return;
      }
    throw std::logic_error("stale neighbor link");
  }

  void insert_all() {
    real_count_ = static_cast<int>(pts_.size());
    make_super_triangle();
    for (int p = 0; p < real_count_; ++p) insert_point(p);
  }

  void make_super_triangle() {
    double xmin = pts_[0].x, xmax = pts_[0].x, ymin = pts_[0].y, ymax = pts_[0].y;
    for (const Point2& p : pts_) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double r = 8.0 * std::max({xmax - xmin, ymax - ymin, 1e-9});
    pts_.push_back({cx - 2.0 * r, cy - r});
    pts_.push_back({cx + 2.0 * r, cy - r});
    pts_.push_back({cx, cy + 2.0 * r});
    Tri super;
    super.v = {real_count_, real_count_ + 1, real_count_ + 2};
    tris_.push_back(super);
  }

  // Brute-force robust point location over alive triangles.
  // Returns triangle index plus the classification: -1 interior, else the
  // edge position the point lies on.
  std::pair<int, int> locate(int p) {
    const Point2 q = point(p);
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
      const Tri& t = tris_[static_cast<std::size_t>(ti)];
      if (!t.alive) continue;
      int zero_pos = -1;
      int zeros = 0;
      bool outside = false;
      for (int e = 0; e < 3; ++e) {
        // Edge opposite v[e] runs v[e+1] -> v[e+2]; CCW means inside is left.
        const int a = t.v[static_cast<std::size_t>((e + 1) % 3)];
        const int b = t.v[static_cast<std::size_t>((e + 2) % 3)];
        const int s = orient2d(point(a), point(b), q);
        if (s < 0) {
          outside = true;
          break;
        }
        if (s == 0) {
          ++zeros;
          zero_pos = e;
        }
      }
      if (outside) continue;
      if (zeros >= 2)
        throw Error("DuplicatePoint", "point coincides with an existing vertex");
      return {ti, zeros == 0 ? -1 : zero_pos};
    }
    throw std::logic_error("point location failed");
  }

  void insert_point(int p) {
    const auto [ti, edge] = locate(p);
    if (edge < 0)
      split_interior(ti, p);
    else
      split_edge(ti, edge, p);
  }

  void split_interior(int ti, int p) {
    const Tri old = tris_[static_cast<std::size_t>(ti)];
    const int a = old.v[0], b = old.v[1], c = old.v[2];
    const int na = old.n[0], nb = old.n[1], nc = old.n[2];
    const int t1 = ti; // (p, b, c)
    const int t2 = static_cast<int>(tris_.size());
    const int t3 = t2 + 1;
    tris_[static_cast<std::size_t>(t1)] = Tri{{p, b, c}, {na, t2, t3}, true};
    tris_.push_back(Tri{{a, p, c}, {t1, nb, t3}, true});
    tris_.push_back(Tri{{a, b, p}, {t1, t2, nc}, true});
    replace_neighbor(nb, ti, t2);
    replace_neighbor(nc, ti, t3);
    legalize(t1, 0);
    legalize(t2, 1);
    legalize(t3, 2);
  }

  void split_edge(int ti, int edge, int p) {
    // p lies on the edge opposite v[edge]; split both adjacent triangles.
    const Tri old = tris_[static_cast<std::size_t>(ti)];
    const int a = old.v[static_cast<std::size_t>(edge)];
    const int b = old.v[static_cast<std::size_t>((edge + 1) % 3)];
    const int c = old.v[static_cast<std::size_t>((edge + 2) % 3)];
    const int na = old.n[static_cast<std::size_t>(edge)];
    const int nb = old.n[static_cast<std::size_t>((edge + 1) % 3)];
    const int nc = old.n[static_cast<std::size_t>((edge + 2) % 3)];
    if (na < 0) throw std::logic_error("open edge inside super triangle");
    const Tri opp = tris_[static_cast<std::size_t>(na)];
    // Apex of the opposite triangle: the vertex that is neither b nor c.
    int qv = -1;
    for (int i = 0; i < 3; ++i)
      if (opp.v[static_cast<std::size_t>(i)] != b && opp.v[static_cast<std::size_t>(i)] != c)
        qv = opp.v[static_cast<std::size_t>(i)];
    if (opp.n[static_cast<std::size_t>(pos_of(opp, qv))] != ti)
      throw std::logic_error("asymmetric adjacency");
    const int m_b = opp.n[static_cast<std::size_t>(pos_of(opp, b))]; // across (c, qv)
    const int m_c = opp.n[static_cast<std::size_t>(pos_of(opp, c))]; // across (qv, b)

    const int T1 = ti; // (a, b, p)
    const int U1 = na; // (c, p, qv)
    const int T2 = static_cast<int>(tris_.size());
    const int U2 = T2 + 1;
    tris_[static_cast<std::size_t>(T1)] = Tri{{a, b, p}, {U2, T2, nc}, true};
    tris_[static_cast<std::size_t>(U1)] = Tri{{c, p, qv}, {U2, m_b, T2}, true};
    tris_.push_back(Tri{{a, p, c}, {U1, nb, T1}, true}); // T2
    tris_.push_back(Tri{{p, b, qv}, {m_c, U1, T1}, true}); // U2
    replace_neighbor(nb, ti, T2);
    replace_neighbor(m_c, na, U2);
    legalize(T1, 2); // edge (a, b) opposite p
    legalize(T2, 1); // edge (c, a) opposite p
    legalize(U1, 1); // edge (qv, c) opposite p
    legalize(U2, 0); // edge (b, qv) opposite p
  }

  // If the neighbor across the edge opposite t.v[pos] violates the Delaunay
  // criterion, flip and recurse; pos always names the newly inserted vertex.
  void legalize(int ti, int pos) {
    Tri& t = tris_[static_cast<std::size_t>(ti)];
    const int o = t.n[static_cast<std::size_t>(pos)];
    if (o < 0) return;
    const Tri& ot = tris_[static_cast<std::size_t>(o)];
    int qv = -1;
    const int e1 = t.v[static_cast<std::size_t>((pos + 1) % 3)];
    const int e2 = t.v[static_cast<std::size_t>((pos + 2) % 3)];
    for (int i = 0; i < 3; ++i)
      if (ot.v[static_cast<std::size_t>(i)] != e1 && ot.v[static_cast<std::size_t>(i)] != e2)
        qv = ot.v[static_cast<std::size_t>(i)];
    if (incircle(point(t.v[0]), point(t.v[1]), point(t.v[2]), point(qv)) > 0) {
      flip(ti, pos);
      // After the flip ti = (p, e1, qv) and o = (p, qv, e2); the edges
      // opposite p are the ones to re-check.
      legalize(ti, 0);
      legalize(o, 0);
    }
  }

  // Flip the edge opposite t.v[pos]. Afterwards:
  //   ti = (p, e1, q), o = (p, q, e2), both CCW, sharing edge (p, q).
  void flip(int ti, int pos) {
    Tri& t = tris_[static_cast<std::size_t>(ti)];
    const int o = t.n[static_cast<std::size_t>(pos)];
    Tri& ot = tris_[static_cast<std::size_t>(o)];
    const int p = t.v[static_cast<std::size_t>(pos)];
    const int e1 = t.v[static_cast<std::size_t>((pos + 1) % 3)];
    const int e2 = t.v[static_cast<std::size_t>((pos + 2) % 3)];
    int qv = -1;
    for (int i = 0; i < 3; ++i)
      if (ot.v[static_cast<std::size_t>(i)] != e1 && ot.v[static_cast<std::size_t>(i)] != e2)
        qv = ot.v[static_cast<std::size_t>(i)];
    const int qpos = pos_of(ot, qv);
    // Neighbors around the quad (p, e1, q, e2).
    const int A = t.n[static_cast<std::size_t>(pos_of(t, e2))];   // across (p, e1)
    const int B = t.n[static_cast<std::size_t>(pos_of(t, e1))];   // across (e2, p)
    const int C = ot.n[static_cast<std::size_t>(pos_of(ot, e2))]; // across (e1, q)
    const int D = ot.n[static_cast<std::size_t>(pos_of(ot, e1))]; // across (q, e2)
    (void)qpos;
    t = Tri{{p, e1, qv}, {C, o, A}, true};
    ot = Tri{{p, qv, e2}, {D, B, ti}, true};
    replace_neighbor(C, o, ti);
    replace_neighbor(B, ti, o);
  }

  bool edge_exists(int a, int b) const { return find_edge(a, b).first >= 0; }

  // Returns {triangle index, position of the vertex opposite the edge}.
  std::pair<int, int> find_edge(int a, int b) const {
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
      const Tri& t = tris_[static_cast<std::size_t>(ti)];
      if (!t.alive) continue;
      for (int i = 0; i < 3; ++i) {
        const int u = t.v[static_cast<std::size_t>((i + 1) % 3)];
        const int w = t.v[static_cast<std::size_t>((i + 2) % 3)];
        if ((u == a && w == b) || (u == b && w == a)) return {ti, i};
      }
    }
    return {-1, -1};
  }

  bool properly_crosses(int a, int b, int u, int v) const {
    const int s1 = orient2d(point(u), point(v), point(a));
    const int s2 = orient2d(point(u), point(v), point(b));
    if (s1 == 0 || s2 == 0 || s1 == s2) return false;
    const int s3 = orient2d(point(a), point(b), point(u));
    const int s4 = orient2d(point(a), point(b), point(v));
    return s3 != 0 && s4 != 0 && s3 != s4;
  }

  void enforce_constraints() {
    const std::size_t nb = boundary_loop_.size();
    for (std::size_t i = 0; i < nb; ++i) {
      const int u = boundary_loop_[i];
      const int v = boundary_loop_[(i + 1) % nb];
      recover_edge(u, v);
      constrained_.insert(edge_key(u, v));
    }
  }

  void recover_edge(int u, int v) {
    long guard = 0;
    while (!edge_exists(u, v)) {
      if (++guard > 100000)
        throw std::logic_error("constraint recovery did not terminate");
      // Collect edges properly crossing (u, v) and flip them away.
      std::deque<EdgeKey> queue;
      for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
        const Tri& t = tris_[static_cast<std::size_t>(ti)];
        if (!t.alive) continue;
        for (int e = 0; e < 3; ++e) {
          const int a = t.v[static_cast<std::size_t>((e + 1) % 3)];
          const int b = t.v[static_cast<std::size_t>((e + 2) % 3)];
          if (a < b && properly_crosses(a, b, u, v)) queue.push_back({a, b});
        }
      }
      if (queue.empty())
        throw std::logic_error("constrained edge missing but nothing crosses it");
      long inner_guard = 0;
      while (!queue.empty()) {
        if (++inner_guard > 100000)
          throw std::logic_error("constraint flip queue did not drain");
        const EdgeKey e = queue.front();
        queue.pop_front();
        const auto [ti, pos] = find_edge(e.first, e.second);
        if (ti < 0) continue;
        if (!properly_crosses(e.first, e.second, u, v)) continue;
        const Tri& t = tris_[static_cast<std::size_t>(ti)];
        const int o = t.n[static_cast<std::size_t>(pos)];
        if (o < 0) throw std::logic_error("crossing edge on hull");
        const int p = t.v[static_cast<std::size_t>(pos)];
        const Tri& ot = tris_[static_cast<std::size_t>(o)];
        int qv = -1;
        for (int i = 0; i < 3; ++i) {
          const int w = ot.v[static_cast<std::size_t>(i)];
          if (w != e.first && w != e.second) qv = w;
        }
        // Flip only if the quad diagonal (p, qv) properly crosses the edge.
        if (properly_crosses(p, qv, e.first, e.second)) {
          flip(ti, pos);
          if (properly_crosses(p, qv, u, v)) queue.push_back(edge_key(p, qv));
        } else {
          queue.push_back(e); // not flippable yet
        }
      }
    }
  }

  void restore_delaunay() {
    // Lawson passes over all non-constrained edges.
    for (int pass = 0; pass < 100; ++pass) {
      bool flipped = false;
      for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
        Tri& t = tris_[static_cast<std::size_t>(ti)];
        if (!t.alive) continue;
        for (int pos = 0; pos < 3; ++pos) {
          const int o = t.n[static_cast<std::size_t>(pos)];
          if (o <= ti) continue; // visit each pair once
          const int e1 = t.v[static_cast<std::size_t>((pos + 1) % 3)];
          const int e2 = t.v[static_cast<std::size_t>((pos + 2) % 3)];
          if (constrained_.count(edge_key(e1, e2))) continue;
          const Tri& ot = tris_[static_cast<std::size_t>(o)];
          int qv = -1;
          for (int i = 0; i < 3; ++i)
            if (ot.v[static_cast<std::size_t>(i)] != e1 &&
                ot.v[static_cast<std::size_t>(i)] != e2)
              qv = ot.v[static_cast<std::size_t>(i)];
          if (incircle(point(t.v[0]), point(t.v[1]), point(t.v[2]), point(qv)) > 0) {
            flip(ti, pos);
            flipped = true;
            break;
          }
        }
      }
      if (!flipped) return;
    }
  }

  void remove_outside() {
    // Flood fill from super-triangle corners across non-constrained edges.
    std::vector<char> outside(tris_.size(), 0);
    std::deque<int> queue;
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
      const Tri& t = tris_[static_cast<std::size_t>(ti)];
      if (!t.alive) continue;
      for (int i = 0; i < 3; ++i)
        if (t.v[static_cast<std::size_t>(i)] >= real_count_) {
          outside[static_cast<std::size_t>(ti)] = 1;
          queue.push_back(ti);
          break;
        }
    }
    while (!queue.empty()) {
      const int ti = queue.front();
      queue.pop_front();
      const Tri& t = tris_[static_cast<std::size_t>(ti)];
      for (int pos = 0; pos < 3; ++pos) {
        const int o = t.n[static_cast<std::size_t>(pos)];
        if (o < 0 || outside[static_cast<std::size_t>(o)]) continue;
        const int e1 = t.v[static_cast<std::size_t>((pos + 1) % 3)];
        const int e2 = t.v[static_cast<std::size_t>((pos + 2) % 3)];
        if (constrained_.count(edge_key(e1, e2))) continue;
        outside[static_cast<std::size_t>(o)] = 1;
        queue.push_back(o);
      }
    }
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
      Tri& t = tris_[static_cast<std::size_t>(ti)];
      if (t.alive && outside[static_cast<std::size_t>(ti)]) t.alive = false;
    }
  }
};

} // namespace

Mesh triangulate(const ScatteredSet& s) {
  std::vector<Point2> points = s.all_points();
  std::vector<int> loop(s.polygon().size());
  for (std::size_t i = 0; i < loop.size(); ++i) loop[i] = static_cast<int>(i);
  Triangulator builder(points, loop);
  Mesh mesh(std::move(points), builder.inside_triangles(), s.polygon());

  const double covered = mesh.total_area();
  const double target = s.polygon().area();
  if (std::fabs(covered - target) > 1e-9 * target)
    throw std::logic_error("triangulation area mismatch");
  std::vector<char> used(mesh.vertices().size(), 0);
  for (const auto& t : mesh.triangles())
    for (int v : t) used[static_cast<std::size_t>(v)] = 1;
  for (char u : used)
    if (!u) throw std::logic_error("triangulation dropped an input point");
  return mesh;
}

// --------------------------------------------------------------------------
// Mesh

Mesh::Mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles)
    : Mesh(vertices, triangles, extract_boundary(vertices, triangles)) {}

Mesh::Mesh(std::vector<Point2> vertices, std::vector<std::array<int, 3>> triangles,
           Polygon boundary)
    : vertices_(std::move(vertices)), tris_(std::move(triangles)),
      boundary_(std::move(boundary)) {
  if (tris_.empty()) throw Error("DegenerateInput", "mesh has no triangles");
  std::vector<char> used(vertices_.size(), 0);
  for (auto& t : tris_) {
    for (int v : t)
      if (v < 0 || v >= static_cast<int>(vertices_.size()))
        throw Error("DegenerateInput", "triangle vertex index out of range");
    const Point2 a = vertices_[static_cast<std::size_t>(t[0])];
    const Point2 b = vertices_[static_cast<std::size_t>(t[1])];
    const Point2 c = vertices_[static_cast<std::size_t>(t[2])];
    const double sa = signed_area(a, b, c);
    if (sa == 0.0) throw Error("DegenerateInput", "mesh triangle has zero area");
    if (sa < 0.0) std::swap(t[1], t[2]);
    for (int v : t) used[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      throw Error("DegenerateInput", "mesh vertex " + std::to_string(i) + " unused");
  compute_metrics();
}

void Mesh::compute_metrics() {
  size_ = 0.0;
  total_area_ = 0.0;
  double min_area = std::numeric_limits<double>::infinity();
  double min_area_inradius = 0.0;
  for (std::size_t n = 0; n < tris_.size(); ++n) {
    const Triangle t = triangle(n);
    size_ = std::max(size_, t.longest_edge());
    total_area_ += t.area();
    if (t.area() < min_area) {
      min_area = t.area();
      min_area_inradius = t.inradius();
    }
  }
  gamma_ = size_ / min_area_inradius;
}

Triangle Mesh::triangle(std::size_t n) const {
  const auto& t = tris_[n];
  return Triangle(vertices_[static_cast<std::size_t>(t[0])],
                  vertices_[static_cast<std::size_t>(t[1])],
                  vertices_[static_cast<std::size_t>(t[2])]);
}

MeshMetrics mesh_metrics(const Mesh& m) { return {m.size(), m.count(), m.gamma()}; }

Mesh refine_uniform(const Mesh& m, int levels) {
  if (levels < 0) throw Error("DegenerateInput", "refinement levels must be >= 0");
  std::vector<Point2> verts = m.vertices();
  std::vector<std::array<int, 3>> tris = m.triangles();
  for (int level = 0; level < levels; ++level) {
    std::map<EdgeKey, int> midpoint;
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    auto mid = [&](int a, int b) {
      const EdgeKey key = edge_key(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Point2 pa = verts[static_cast<std::size_t>(a)];
      const Point2 pb = verts[static_cast<std::size_t>(b)];
      const int idx = static_cast<int>(verts.size());
      verts.push_back({0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)});
      midpoint.emplace(key, idx);
      return idx;
    };
    for (const auto& t : tris) {
      const int a = t[0], b = t[1], c = t[2];
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({ab, b, bc});
      next.push_back({ca, bc, c});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  return Mesh(std::move(verts), std::move(tris), m.boundary());
}

// --------------------------------------------------------------------------
// Conformity checking

namespace {

bool strictly_inside(const std::array<Point2, 3>& t, Point2 p) {
  return orient2d(t[0], t[1], p) > 0 && orient2d(t[1], t[2], p) > 0 &&
         orient2d(t[2], t[0], p) > 0;
}

bool on_triangle_boundary(const std::array<Point2, 3>& t, Point2 p) {
  return on_segment(t[0], t[1], p) || on_segment(t[1], t[2], p) ||
         on_segment(t[2], t[0], p);
}

// Check one unordered pair of mesh triangles for a conforming contact.
bool pair_conforms(const std::vector<Point2>& verts, const std::array<int, 3>& ta,
                   const std::array<int, 3>& tb) {
  std::vector<int> shared;
  for (int va : ta)
    for (int vb : tb)
      if (va == vb) shared.push_back(va);
  if (shared.size() >= 3) return false; // duplicate triangle

  std::array<Point2, 3> A, B;
  for (int i = 0; i < 3; ++i) {
    A[static_cast<std::size_t>(i)] = verts[static_cast<std::size_t>(ta[static_cast<std::size_t>(i)])];
    B[static_cast<std::size_t>(i)] = verts[static_cast<std::size_t>(tb[static_cast<std::size_t>(i)])];
  }

  if (shared.size() == 2) {
    // Shared edge: apexes must lie strictly on opposite sides.
    const Point2 e1 = verts[static_cast<std::size_t>(shared[0])];
    const Point2 e2 = verts[static_cast<std::size_t>(shared[1])];
    Point2 apex_a{}, apex_b{};
    for (int v : ta)
      if (v != shared[0] && v != shared[1]) apex_a = verts[static_cast<std::size_t>(v)];
    for (int v : tb)
      if (v != shared[0] && v != shared[1]) apex_b = verts[static_cast<std::size_t>(v)];
    return orient2d(e1, e2, apex_a) * orient2d(e1, e2, apex_b) < 0;
  }

  // Shared vertex or disjoint: vertices may not lie in or on the other
  // triangle (except the shared vertex itself), and edges may not cross.
  auto vertex_clear = [&](const std::array<int, 3>& from, const std::array<Point2, 3>& other) {
    for (int v : from) {
      if (!shared.empty() && v == shared[0]) continue;
      const Point2 p = verts[static_cast<std::size_t>(v)];
      if (strictly_inside(other, p) || on_triangle_boundary(other, p)) return false;
    }
    return true;
  };
  if (!vertex_clear(ta, B) || !vertex_clear(tb, A)) return false;

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int a1 = ta[static_cast<std::size_t>(i)];
      const int a2 = ta[static_cast<std::size_t>((i + 1) % 3)];
      const int b1 = tb[static_cast<std::size_t>(j)];
      const int b2 = tb[static_cast<std::size_t>((j + 1) % 3)];
      const Point2 pa1 = verts[static_cast<std::size_t>(a1)];
      const Point2 pa2 = verts[static_cast<std::size_t>(a2)];
      const Point2 pb1 = verts[static_cast<std::size_t>(b1)];
      const Point2 pb2 = verts[static_cast<std::size_t>(b2)];
      if (!shared.empty()) {
        const int s = shared[0];
        const bool a_touches = (a1 == s || a2 == s);
        const bool b_touches = (b1 == s || b2 == s);
        if (a_touches && b_touches) {
          // Both edges end at the shared vertex; any other contact means
          // collinear overlap.
          const Point2 ps = verts[static_cast<std::size_t>(s)];
          const Point2 tip_a = (a1 == s) ? pa2 : pa1;
          const Point2 tip_b = (b1 == s) ? pb2 : pb1;
          if (on_segment(ps, tip_a, tip_b) || on_segment(ps, tip_b, tip_a)) return false;
          continue;
        }
      }
      if (segments_intersect(pa1, pa2, pb1, pb2)) return false;
    }
  return true;
}

} // namespace

bool is_conforming(const Mesh& m) {
  const auto& verts = m.vertices();
  const auto& tris = m.triangles();
  struct Box {
    double xmin, xmax, ymin, ymax;
    std::size_t idx;
  };
  std::vector<Box> boxes(tris.size());
  for (std::size_t n = 0; n < tris.size(); ++n) {
    Box b{1e300, -1e300, 1e300, -1e300, n};
    for (int v : tris[n]) {
      const Point2 p = verts[static_cast<std::size_t>(v)];
      b.xmin = std::min(b.xmin, p.x);
      b.xmax = std::max(b.xmax, p.x);
      b.ymin = std::min(b.ymin, p.y);
      b.ymax = std::max(b.ymax, p.y);
    }
    boxes[n] = b;
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.xmin < b.xmin; });
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size() && boxes[j].xmin <= boxes[i].xmax; ++j) {
      if (boxes[j].ymin > boxes[i].ymax || boxes[j].ymax < boxes[i].ymin) continue;
      if (!pair_conforms(verts, tris[boxes[i].idx], tris[boxes[j].idx])) return false;
    }
  return true;
}

Polygon extract_boundary(const std::vector<Point2>& vertices,
                         const std::vector<std::array<int, 3>>& triangles) {
  // Boundary edges appear in exactly one triangle. Directed edges of CCW
  // triangles traverse the boundary counter-clockwise.
  std::map<EdgeKey, int> edge_count;
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i)
      ++edge_count[edge_key(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 3)])];
  std::map<int, int> next_on_boundary;
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i) {
      const int a = t[static_cast<std::size_t>(i)];
      const int b = t[static_cast<std::size_t>((i + 1) % 3)];
      if (edge_count[edge_key(a, b)] == 1) next_on_boundary[a] = b;
    }
  if (next_on_boundary.empty())
    throw Error("DegenerateInput", "mesh has no boundary edges");
  std::vector<int> loop;
  const int start = next_on_boundary.begin()->first;
  int cur = start;
  do {
    loop.push_back(cur);
    auto it = next_on_boundary.find(cur);
    if (it == next_on_boundary.end())
      throw Error("DegenerateInput", "mesh boundary is not a closed loop");
    cur = it->second;
    if (loop.size() > next_on_boundary.size())
      throw Error("DegenerateInput", "mesh boundary is not a single loop");
  } while (cur != start);
  if (loop.size() != next_on_boundary.size())
    throw Error("DegenerateInput", "mesh boundary has multiple loops");

  // Merge collinear runs so the loop satisfies the polygon invariants.
  std::vector<Point2> poly;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 prev = vertices[static_cast<std::size_t>(loop[(i + n - 1) % n])];
    const Point2 here = vertices[static_cast<std::size_t>(loop[i])];
    const Point2 next = vertices[static_cast<std::size_t>(loop[(i + 1) % n])];
    if (orient2d(prev, here, next) != 0) poly.push_back(here);
  }
  return Polygon(std::move(poly));
}

} // namespace mzq
