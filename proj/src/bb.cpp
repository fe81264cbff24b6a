#include "mzq/bb.hpp"

#include "mzq/error.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mzq {

namespace {

constexpr std::array<double, 15> kFactorial = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
};

void check_degree(int d) {
  if (d < 1) throw Error("BadDegree", "degree must be >= 1, got " + std::to_string(d));
  if (d > kMaxDegree)
    throw Error("DegreeTooLarge", "degree " + std::to_string(d) + " exceeds " +
                                      std::to_string(kMaxDegree));
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

} // namespace

double factorial(int n) {
  if (n < 0 || n >= static_cast<int>(kFactorial.size()))
    throw Error("BadDegree", "factorial argument out of range: " + std::to_string(n));
  return kFactorial[static_cast<std::size_t>(n)];
}

IndexOrder::IndexOrder(int d) : degree_(d) {
  check_degree(d);
  entries_.reserve(space_dimension(d));
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) entries_.push_back({i, j, d - i - j});
}

std::size_t IndexOrder::position(const MultiIndex& idx) const {
  if (idx.degree() != degree_)
    throw Error("IndexDegreeMismatch", "multi-index degree does not match order degree");
  // Count entries preceding idx in (i desc, j desc) order.
  std::size_t pos = 0;
  for (int i = degree_; i > idx.i; --i) pos += static_cast<std::size_t>(degree_ - i + 1);
  pos += static_cast<std::size_t>(degree_ - idx.i - idx.j);
  return pos;
}

double trinomial(int d, const MultiIndex& idx) {
  check_degree(d);
  if (idx.degree() != d || idx.i < 0 || idx.j < 0 || idx.k < 0)
    throw Error("IndexDegreeMismatch",
                "multi-index (" + std::to_string(idx.i) + "," + std::to_string(idx.j) + "," +
                    std::to_string(idx.k) + ") does not sum to " + std::to_string(d));
  return kFactorial[static_cast<std::size_t>(d)] /
         (kFactorial[static_cast<std::size_t>(idx.i)] *
          kFactorial[static_cast<std::size_t>(idx.j)] *
          kFactorial[static_cast<std::size_t>(idx.k)]);
}

double eval_basis(const Barycentric& b, int d, const MultiIndex& idx) {
  const double coeff = trinomial(d, idx);
  return coeff * ipow(b.b1, idx.i) * ipow(b.b2, idx.j) * ipow(b.b3, idx.k);
}

double eval_basis(const Triangle& t, int d, const MultiIndex& idx, Point2 p) {
  return eval_basis(t.barycentric(p), d, idx);
}

std::vector<Point2> domain_points(const Triangle& t, int d) {
  const IndexOrder order(d);
  std::vector<Point2> pts;
  pts.reserve(order.size());
  const double inv = 1.0 / d;
  for (const MultiIndex& idx : order)
    pts.push_back(inv * (static_cast<double>(idx.i) * t.v1() +
                         static_cast<double>(idx.j) * t.v2() +
                         static_cast<double>(idx.k) * t.v3()));
  return pts;
}

double basis_integral(const Triangle& t, int d) {
  check_degree(d);
  const double binom = 0.5 * (d + 2) * (d + 1); // C(d+2, 2)
  return t.area() / binom;
}

BForm::BForm(Triangle t, int d, std::vector<double> coeffs)
    : tri_(std::move(t)), degree_(d), coeffs_(std::move(coeffs)) {
  check_degree(d);
  if (coeffs_.size() != space_dimension(d))
    throw Error("IndexDegreeMismatch",
                "coefficient count " + std::to_string(coeffs_.size()) +
                    " does not match dim P_" + std::to_string(d));
}

double BForm::eval(Point2 p) const {
  const Barycentric b = tri_.barycentric(p);
  const IndexOrder order(degree_);
  double sum = 0.0;
  for (std::size_t n = 0; n < order.size(); ++n)
    sum += coeffs_[n] * eval_basis(b, degree_, order[n]);
  return sum;
}

} // namespace mzq
