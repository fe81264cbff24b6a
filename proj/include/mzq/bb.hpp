#ifndef MZQ_BB_HPP
#define MZQ_BB_HPP

#include "mzq/geometry.hpp"

#include <cstddef>
#include <vector>

namespace mzq {

// Degrees above 12 are rejected: the trinomial coefficients and the
// collocation solves degrade past that, and nothing here needs them.
inline constexpr int kMaxDegree = 12;

double factorial(int n); // exact for n <= 14

struct MultiIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  int degree() const { return i + j + k; }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
};

// All multi-indices with i + j + k = d, ordered i descending then j
// descending (so the index of vertex v1 comes first).
class IndexOrder {
public:
  explicit IndexOrder(int d); // throws BadDegree / DegreeTooLarge

  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  const MultiIndex& operator[](std::size_t n) const { return entries_[n]; }
  const std::vector<MultiIndex>& entries() const { return entries_; }

  std::size_t position(const MultiIndex& idx) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

private:
  int degree_;
  std::vector<MultiIndex> entries_;
};

inline std::size_t space_dimension(int d) {
  return static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

// d! / (i! j! k!)
double trinomial(int d, const MultiIndex& idx);

// B_idx evaluated at given barycentric coordinates.
double eval_basis(const Barycentric& b, int d, const MultiIndex& idx);
double eval_basis(const Triangle& t, int d, const MultiIndex& idx, Point2 p);

// The lattice (i*v1 + j*v2 + k*v3) / d in IndexOrder.
std::vector<Point2> domain_points(const Triangle& t, int d);

// Integral over t of any single degree-d basis function: area / C(d+2, 2).
double basis_integral(const Triangle& t, int d);

// Polynomial in Bernstein-Bezier form: coefficients against IndexOrder(d).
class BForm {
public:
  BForm(Triangle t, int d, std::vector<double> coeffs);

  const Triangle& triangle() const { return tri_; }
  int degree() const { return degree_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double eval(Point2 p) const;

private:
  Triangle tri_;
  int degree_;
  std::vector<double> coeffs_;
};

inline double eval_bform(const BForm& f, Point2 p) { return f.eval(p); }

} // namespace mzq

#endif
