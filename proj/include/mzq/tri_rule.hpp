#ifndef MZQ_TRI_RULE_HPP
#define MZQ_TRI_RULE_HPP

#include "mzq/bb.hpp"
#include "mzq/geometry.hpp"
#include "mzq/linalg.hpp"

#include <functional>
#include <span>
#include <vector>

namespace mzq {

using Integrand = std::function<double(Point2)>;

// Values B_col(xi_row) for all degree-d basis functions at all degree-d
// domain points, rows and columns both in IndexOrder. The entries depend
// only on d: the barycentric coordinates of xi_ijk are (i, j, k) / d.
class CollocationMatrix {
public:
  explicit CollocationMatrix(int d);

  int degree() const { return degree_; }
  std::size_t size() const { return matrix_.size(); }
  double operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }
  const DenseMatrix& matrix() const { return matrix_; }

private:
  int degree_;
  DenseMatrix matrix_;
};

CollocationMatrix collocation_matrix(const Triangle& t, int d);

struct TriangleRule {
  Triangle triangle;
  int degree = 0;
  std::vector<Point2> points;  // domain points, IndexOrder
  std::vector<double> weights; // same order
  bool all_positive = false;
  double condition = 0.0; // infinity-norm condition estimate of the collocation matrix
};

// Quadrature weights: (area / C(d+2,2)) times the column sums of the inverse
// collocation matrix, obtained from one transposed solve with all-ones
// right-hand side. Throws IllConditionedCollocation if the solve cannot be
// trusted.
TriangleRule triangle_weights(const Triangle& t, int d);

// Normalized weights w / area; depends only on d.
std::vector<double> normalized_triangle_weights(int d);

// Weighted sum of f over the rule points. Throws NonFiniteSample if f
// produces a non-finite value.
double apply_rule(const TriangleRule& rule, const Integrand& f);

// Degree-d interpolant matching the given values at the domain points.
BForm interpolate(const Triangle& t, int d, std::span<const double> values);

// Exact integral of x^a y^b over t, via affine map to the reference triangle
// and closed-form reference integrals u^i v^j -> i! j! / (i+j+2)!.
double monomial_integral(const Triangle& t, int a, int b);

// Worst relative quadrature error over all monomials x^a y^b with
// a + b <= degree, measured against monomial_integral.
double exactness_check(const TriangleRule& rule);

} // namespace mzq

#endif
