#include "mzq/tri_rule.hpp"

#include "mzq/error.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace mzq {

CollocationMatrix::CollocationMatrix(int d) : degree_(d) {
  const IndexOrder order(d);
  const std::size_t n = order.size();
  matrix_ = DenseMatrix(n);
  const double inv = 1.0 / d;
  for (std::size_t row = 0; row < n; ++row) {
    const MultiIndex& pt = order[row];
    const Barycentric b{pt.i * inv, pt.j * inv, pt.k * inv};
    for (std::size_t col = 0; col < n; ++col)
      matrix_(row, col) = eval_basis(b, d, order[col]);
  }
}

CollocationMatrix collocation_matrix(const Triangle&, int d) { return CollocationMatrix(d); }

namespace {

struct NormalizedWeights {
  std::vector<double> weights; // w / area
  double condition = 0.0;
};

NormalizedWeights solve_normalized_weights(int d) {
  const CollocationMatrix colloc(d);
  const std::size_t n = colloc.size();
  const LuFactorization lu(colloc.matrix());
  if (lu.singular())
    throw Error("IllConditionedCollocation", "collocation matrix singular at degree " +
                                                 std::to_string(d));
  // Column sums of B^{-1} solve B^T s = 1.
  std::vector<double> ones(n, 1.0);
  std::vector<double> sums(n);
  lu.solve_transposed(ones, sums);
  const double condition = lu.condition_estimate();
  const double residual = lu.residual_inf(ones, sums, /*transposed=*/true);
  if (residual > 1e-10) {
    std::ostringstream msg;
    msg << "transposed collocation solve residual " << residual << " at degree " << d
        << " (condition estimate " << condition << ")";
    throw Error("IllConditionedCollocation", msg.str());
  }
  const double scale = 1.0 / (0.5 * (d + 1) * (d + 2));
  for (double& s : sums) s *= scale;
  return {std::move(sums), condition};
}

} // namespace

std::vector<double> normalized_triangle_weights(int d) {
  return solve_normalized_weights(d).weights;
}

TriangleRule triangle_weights(const Triangle& t, int d) {
  NormalizedWeights normalized = solve_normalized_weights(d);
  TriangleRule rule{t, d, domain_points(t, d), std::move(normalized.weights), false,
                    normalized.condition};
  const double area = t.area();
  bool positive = true;
  for (double& w : rule.weights) {
    w *= area;
    positive = positive && w > 0.0;
  }
  rule.all_positive = positive;
  return rule;
}

double apply_rule(const TriangleRule& rule, const Integrand& f) {
  double sum = 0.0;
  for (std::size_t n = 0; n < rule.points.size(); ++n) {
    const double v = f(rule.points[n]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand not finite at (" << rule.points[n].x << ", " << rule.points[n].y << ")";
      throw Error("NonFiniteSample", msg.str());
    }
    sum += rule.weights[n] * v;
  }
  return sum;
}

BForm interpolate(const Triangle& t, int d, std::span<const double> values) {
  const CollocationMatrix colloc(d);
  const std::size_t n = colloc.size();
  if (values.size() != n)
    throw Error("IndexDegreeMismatch", "expected " + std::to_string(n) + " values, got " +
                                           std::to_string(values.size()));
  const LuFactorization lu(colloc.matrix());
  if (lu.singular())
    throw Error("IllConditionedCollocation", "collocation matrix singular at degree " +
                                                 std::to_string(d));
  std::vector<double> coeffs(n);
  lu.solve(values, coeffs);
  const double residual = lu.residual_inf(values, coeffs, /*transposed=*/false);
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::fabs(v));
  if (residual > 1e-9 * scale)
    throw Error("IllConditionedCollocation",
                "interpolation solve residual too large at degree " + std::to_string(d));
  return BForm(t, d, std::move(coeffs));
}

namespace {

// Dense bivariate polynomial in reference coordinates (u, v).
struct RefPoly {
  int deg = 0;
  std::vector<double> c; // c[i * (deg+1) + j] multiplies u^i v^j

  explicit RefPoly(int degree) : deg(degree), c((degree + 1) * (degree + 1), 0.0) {}
  double& at(int i, int j) { return c[static_cast<std::size_t>(i * (deg + 1) + j)]; }
  double at(int i, int j) const { return c[static_cast<std::size_t>(i * (deg + 1) + j)]; }
};

RefPoly multiply(const RefPoly& a, const RefPoly& b) {
  RefPoly out(a.deg + b.deg);
  for (int i = 0; i <= a.deg; ++i)
    for (int j = 0; j <= a.deg; ++j) {
      const double av = a.at(i, j);
      if (av == 0.0) continue;
      for (int k = 0; k <= b.deg; ++k)
        for (int l = 0; l <= b.deg; ++l) out.at(i + k, j + l) += av * b.at(k, l);
    }
  return out;
}

// (c0 + c1 u + c2 v)^n by repeated multiplication.
RefPoly affine_power(double c0, double c1, double c2, int n) {
  RefPoly result(0);
  result.at(0, 0) = 1.0;
  RefPoly lin(1);
  lin.at(0, 0) = c0;
  lin.at(1, 0) = c1;
  lin.at(0, 1) = c2;
  for (int s = 0; s < n; ++s) result = multiply(result, lin);
  return result;
}

} // namespace

double monomial_integral(const Triangle& t, int a, int b) {
  if (a < 0 || b < 0 || a + b > 2 * kMaxDegree)
    throw Error("BadDegree", "monomial exponents out of range");
  const Point2 p1 = t.v1(), p2 = t.v2(), p3 = t.v3();
  const RefPoly xp = affine_power(p1.x, p2.x - p1.x, p3.x - p1.x, a);
  const RefPoly yp = affine_power(p1.y, p2.y - p1.y, p3.y - p1.y, b);
  const RefPoly prod = multiply(xp, yp);
  double sum = 0.0;
  for (int i = 0; i <= prod.deg; ++i)
    for (int j = 0; j <= prod.deg - i; ++j) {
      const double coeff = prod.at(i, j);
      if (coeff == 0.0) continue;
      // Reference integral of u^i v^j over the unit triangle.
      sum += coeff * factorial(i) * factorial(j) / factorial(i + j + 2);
    }
  return 2.0 * t.area() * sum;
}

double exactness_check(const TriangleRule& rule) {
  double worst = 0.0;
  for (int a = 0; a <= rule.degree; ++a)
    for (int b = 0; a + b <= rule.degree; ++b) {
      double quad = 0.0;
      double fmax = 0.0;
      for (std::size_t n = 0; n < rule.points.size(); ++n) {
        const double v = std::pow(rule.points[n].x, a) * std::pow(rule.points[n].y, b);
        quad += rule.weights[n] * v;
        fmax = std::max(fmax, std::fabs(v));
      }
      const double exact = monomial_integral(rule.triangle, a, b);
      const double scale = std::max(std::fabs(exact), rule.triangle.area() * fmax);
      worst = std::max(worst, std::fabs(quad - exact) / scale);
    }
  return worst;
}

} // namespace mzq
