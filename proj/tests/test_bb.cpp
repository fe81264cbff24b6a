#include "mzq/bb.hpp"

#include "mzq/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace mzq;
using testutil::random_triangle;

TEST_SUITE_BEGIN("bb");

TEST_CASE("index order") {
  const IndexOrder d1(1);
  REQUIRE(d1.size() == 3);
  CHECK(d1[0] == MultiIndex{1, 0, 0});
  CHECK(d1[1] == MultiIndex{0, 1, 0});
  CHECK(d1[2] == MultiIndex{0, 0, 1});

  const IndexOrder d2(2);
  REQUIRE(d2.size() == 6);
  CHECK(d2[0] == MultiIndex{2, 0, 0});
  CHECK(d2[1] == MultiIndex{1, 1, 0});
  CHECK(d2[2] == MultiIndex{1, 0, 1});
  CHECK(d2[3] == MultiIndex{0, 2, 0});
  CHECK(d2[4] == MultiIndex{0, 1, 1});
  CHECK(d2[5] == MultiIndex{0, 0, 2});

  CHECK(IndexOrder(5).size() == 21);
  for (int d = 1; d <= 12; ++d) {
    const IndexOrder order(d);
    CHECK(order.size() == space_dimension(d));
    for (std::size_t n = 0; n < order.size(); ++n) {
      CHECK(order[n].degree() == d);
      CHECK(order.position(order[n]) == n);
    }
  }

  CHECK_THROWS_WITH_AS(IndexOrder(0), doctest::Contains("BadDegree"), Error);
  CHECK_THROWS_WITH_AS(IndexOrder(13), doctest::Contains("DegreeTooLarge"), Error);
}

TEST_CASE("basis evaluation at special points") {
  SplitMix64 rng(21);
  const Triangle t = random_triangle(rng);

  CHECK(eval_basis(t, 1, {1, 0, 0}, t.v1()) == doctest::Approx(1.0).epsilon(1e-13));

  // B_{100} vanishes on the edge opposite v1.
  for (int k = 0; k < 10; ++k) {
    const double s = 0.5 * (rng.next_symmetric() + 1.0);
    const Point2 p = s * t.v2() + (1.0 - s) * t.v3();
    CHECK(std::fabs(eval_basis(t, 3, {3, 0, 0}, p)) < 1e-12);
  }

  // Direct evaluation: d=2, B_{110} at the midpoint of (v1, v2).
  const Point2 mid = 0.5 * (t.v1() + t.v2());
  CHECK(eval_basis(t, 2, {1, 1, 0}, mid) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(eval_basis(t, 3, {1, 1, 0}, mid),
                       doctest::Contains("IndexDegreeMismatch"), Error);
}

TEST_CASE("partition of unity everywhere, range inside") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const Triangle t = random_triangle(rng);
    for (int d : {1, 2, 3, 5, 8}) {
      const IndexOrder order(d);
      for (int k = 0; k < 200; ++k) {
        const Point2 p{4.0 * rng.next_symmetric(), 4.0 * rng.next_symmetric()};
        double sum = 0.0, magnitude = 0.0;
        for (const MultiIndex& idx : order) {
          const double v = eval_basis(t, d, idx, p);
          sum += v;
          magnitude += std::fabs(v);
        }
        // Far outside the triangle the terms grow and cancel; tolerance
        // follows the conditioning of the sum.
        CHECK(std::fabs(sum - 1.0) < 1e-12 * std::max(1.0, magnitude));
      }
      for (int k = 0; k < 50; ++k) {
        const Point2 p = testutil::random_point_in_triangle(t, rng);
        for (const MultiIndex& idx : order) {
          const double v = eval_basis(t, d, idx, p);
          CHECK(v >= -1e-13);
          CHECK(v <= 1.0 + 1e-13);
        }
      }
    }
  }
}

TEST_CASE("domain points") {
  const Triangle t({0, 0}, {1, 0}, {0, 1});
  const auto d1 = domain_points(t, 1);
  REQUIRE(d1.size() == 3);
  CHECK(d1[0] == t.v1());
  CHECK(d1[1] == t.v2());
  CHECK(d1[2] == t.v3());

  const auto d2 = domain_points(t, 2);
  REQUIRE(d2.size() == 6);
  CHECK(d2[1].x == doctest::Approx(0.5).epsilon(1e-15)); // midpoint of (v1, v2)
  CHECK(d2[1].y == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(d2[2].x == doctest::Approx(0.0).epsilon(1e-15)); // midpoint of (v1, v3)
  CHECK(d2[2].y == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d2[4].x == doctest::Approx(0.5).epsilon(1e-15)); // midpoint of (v2, v3)
  CHECK(d2[4].y == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(domain_points(t, 3).size() == 10);

  SplitMix64 rng(23);
  const Triangle r = random_triangle(rng);
  for (const Point2& p : domain_points(r, 7)) CHECK(r.contains(p, 1e-12));
}

TEST_CASE("basis integral closed form") {
  const Triangle t({0, 0}, {1, 0}, {0, 1});
  CHECK(basis_integral(t, 1) == doctest::Approx(0.5 / 3.0).epsilon(1e-15));
  CHECK(basis_integral(t, 2) == doctest::Approx(0.5 / 6.0).epsilon(1e-15));

  SplitMix64 rng(24);
  const Triangle r = random_triangle(rng);
  for (int d = 1; d <= 12; ++d)
    CHECK(basis_integral(r, d) ==
          doctest::Approx(r.area() / (0.5 * (d + 1) * (d + 2))).epsilon(1e-15));
}

TEST_CASE("bform evaluation") {
  SplitMix64 rng(25);
  const Triangle t = random_triangle(rng);

  // All-ones coefficients reproduce the constant 1.
  for (int d : {1, 2, 4}) {
    const BForm one(t, d, std::vector<double>(space_dimension(d), 1.0));
    for (int k = 0; k < 20; ++k) {
      const Point2 p = testutil::random_point_in_triangle(t, rng);
      CHECK(one.eval(p) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  // Unit coefficient vector picks out a single basis function.
  const int d = 3;
  const IndexOrder order(d);
  for (std::size_t pick : {std::size_t{0}, std::size_t{4}, std::size_t{9}}) {
    std::vector<double> coeffs(order.size(), 0.0);
    coeffs[pick] = 1.0;
    const BForm f(t, d, coeffs);
    const Point2 p = testutil::random_point_in_triangle(t, rng);
    CHECK(f.eval(p) == doctest::Approx(eval_basis(t, d, order[pick], p)).epsilon(1e-12));
  }

  // Degree-1 coefficients are vertex values.
  const BForm lin(t, 1, {2.5, -1.0, 4.0});
  CHECK(lin.eval(t.v2()) == doctest::Approx(-1.0).epsilon(1e-12));

  // Degree-1 reproduction of an affine function from its domain-point values.
  const auto affine = [](Point2 p) { return 0.7 * p.x - 1.3 * p.y + 0.25; };
  const auto pts = domain_points(t, 1);
  const BForm rep(t, 1, {affine(pts[0]), affine(pts[1]), affine(pts[2])});
  for (int k = 0; k < 30; ++k) {
    const Point2 p = testutil::random_point_in_triangle(t, rng);
    CHECK(rep.eval(p) == doctest::Approx(affine(p)).epsilon(1e-12));
  }
}

TEST_SUITE_END();
