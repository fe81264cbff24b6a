#include "mzq/mz.hpp"

#include "mzq/error.hpp"
#include "mzq/rng.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace mzq;

namespace {

OracleConfig mz_cfg() {
  OracleConfig cfg;
  cfg.tolerance = 1e-10;
  return cfg;
}

PolygonRule sample_polygon_rule(SplitMix64& rng, int interior) {
  return polygon_weights(triangulate(testutil::random_scattered_set(rng, interior)));
}

} // namespace

TEST_SUITE_BEGIN("mz");

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);

  SplitMix64 a(1234567), b(1234567);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());

  SplitMix64 u(99);
  for (int k = 0; k < 1000; ++k) {
    const double v = u.next_symmetric();
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("sample_polynomial basics") {
  CHECK(sample_polynomial(0, 7).coeffs().size() == 1);
  CHECK(sample_polynomial(3, 7).coeffs().size() == 10);

  const PolySample a = sample_polynomial(5, 123), b = sample_polynomial(5, 123);
  CHECK(a.coeffs() == b.coeffs());

  double norm = 0.0;
  for (double c : a.coeffs()) norm += std::fabs(c);
  CHECK(norm > 0.0);
}

TEST_CASE("hand-derived triangle ratios") {
  const Triangle t({0, 0}, {1, 0}, {0, 1});

  // chi = x, p = 2: (1/6) / (1/12) = 2.
  const PolySample chi_x(1, {0.0, 1.0, 0.0});
  CHECK(mz_ratio_triangle(t, 1, 2.0, chi_x, mz_cfg()) == doctest::Approx(2.0).epsilon(1e-9));

  // Linear chi, p = inf: vertex max equals the sup, ratio exactly 1.
  const PolySample chi_lin(1, {0.25, 1.0, -0.5});
  CHECK(mz_ratio_triangle(t, 1, kInfinity, chi_lin, mz_cfg()) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Constant chi: every ratio is 1.
  const PolySample chi_const(0, {0.7});
  for (double p : {1.0, 2.0, kInfinity})
    CHECK(mz_ratio_triangle(t, 1, p, chi_const, mz_cfg()) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("degenerate polynomials are rejected") {
  const Triangle t({0, 0}, {1, 0}, {0, 1});
  const PolySample zero(2, std::vector<double>(6, 0.0));
  CHECK_THROWS_WITH_AS(mz_ratio_triangle(t, 1, 2.0, zero, mz_cfg()),
                       doctest::Contains("DegeneratePolynomial"), Error);
  CHECK_THROWS_WITH_AS(mz_ratio_triangle(t, 2, 2.0, zero, mz_cfg()),
                       doctest::Contains("BadDegree"), Error);
}

TEST_CASE("scale invariance of ratios") {
  // Invariance under chi -> lambda * chi does not depend on how tightly the
  // denominator is integrated, so a loose oracle keeps this test fast.
  OracleConfig cfg;
  cfg.tolerance = 1e-7;
  SplitMix64 rng(81);
  const Triangle t = testutil::random_triangle(rng);
  const PolygonRule poly = sample_polygon_rule(rng, 6);
  for (int trial = 0; trial < 2; ++trial) {
    const PolySample chi = sample_polynomial(3, 9000 + static_cast<unsigned>(trial));
    for (double p : {1.0, 2.0, kInfinity}) {
      const double r0 = mz_ratio_triangle(t, 1, p, chi, cfg);
      const double q0 = mz_ratio_polygon(poly, p, chi, cfg);
      for (double lambda : {2.0, -2.0, 0.5, 1024.0}) {
        const PolySample scaled = chi.scaled(lambda);
        const double r1 = mz_ratio_triangle(t, 1, p, scaled, cfg);
        CHECK(std::fabs(r0 - r1) <= 1e-12 * std::max(1.0, r0));
        const double q1 = mz_ratio_polygon(poly, p, scaled, cfg);
        CHECK(std::fabs(q0 - q1) <= 1e-12 * std::max(1.0, q0));
      }
    }
  }
}

TEST_CASE("sup-norm ratios never exceed one") {
  SplitMix64 rng(82);
  const Triangle t = testutil::random_triangle(rng);
  for (int d : {1, 3, 5}) {
    const MZReport r = mz_ensemble_triangle(t, d, kInfinity, d + 2, 100, 4242, mz_cfg());
    CHECK(r.ratio_max <= 1.0 + 1e-12);
  }
  const PolygonRule poly = sample_polygon_rule(rng, 10);
  const MZReport r = mz_ensemble_polygon(poly, kInfinity, 4, 100, 4242, mz_cfg());
  CHECK(r.ratio_max <= 1.0 + 1e-12);
}

TEST_CASE("triangle d=1 N<=1 sup ratios are exactly one") {
  const Triangle t({0, 0}, {1, 0}, {0, 1});
  const MZReport r = mz_ensemble_triangle(t, 1, kInfinity, 1, 200, 7, mz_cfg());
  CHECK(r.eta_observed <= 1e-10);
  const MZReport r0 = mz_ensemble_triangle(t, 1, kInfinity, 0, 100, 7, mz_cfg());
  CHECK(r0.ratio_min == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r0.ratio_max == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("positive lower envelope for d in {1,3,5}, N <= d, p in {1,2}") {
  OracleConfig cfg;
  cfg.tolerance = 1e-7; // positivity is insensitive to denominator accuracy
  SplitMix64 rng(83);
  const Triangle t = testutil::random_triangle(rng);
  for (int d : {1, 3, 5})
    for (double p : {1.0, 2.0}) {
      const MZReport r = mz_ensemble_triangle(t, d, p, d, 10, 99, cfg);
      CHECK(r.ratio_min > 0.0);
    }
}

TEST_CASE("golden envelope: unit right triangle, d=1, N=1, seed 42") {
  const Triangle t({0, 0}, {1, 0}, {0, 1});
  const MZReport r = mz_ensemble_triangle(t, 1, 2.0, 1, 50, 42, mz_cfg());
  CHECK(r.ratio_min == doctest::Approx(1.0183163541590865).epsilon(1e-12));
  CHECK(r.ratio_mean == doctest::Approx(1.7645132884364219).epsilon(1e-12));
  CHECK(r.ratio_max == doctest::Approx(3.9569546598351084).epsilon(1e-12));
  CHECK(r.discarded == 0);

  // Re-running is bit-stable.
  const MZReport again = mz_ensemble_triangle(t, 1, 2.0, 1, 50, 42, mz_cfg());
  CHECK(again.ratio_min == r.ratio_min);
  CHECK(again.ratio_mean == r.ratio_mean);
  CHECK(again.ratio_max == r.ratio_max);
}

TEST_CASE("N=0 ensembles give unit ratios") {
  SplitMix64 rng(84);
  const PolygonRule poly = sample_polygon_rule(rng, 5);
  for (double p : {1.0, 2.0, kInfinity}) {
    const MZReport r = mz_ensemble_polygon(poly, p, 0, 50, 11, mz_cfg());
    CHECK(r.ratio_min == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.ratio_max == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("sup ratios improve monotonically under refinement per trial") {
  SplitMix64 rng(85);
  Mesh mesh = triangulate(testutil::random_scattered_set(rng, 6));
  std::vector<double> etas;
  for (int level = 0; level < 3; ++level) {
    if (level > 0) mesh = refine_uniform(mesh, 1);
    const MZReport r = mz_ensemble_polygon(polygon_weights(mesh), kInfinity, 4, 60, 555,
                                           mz_cfg());
    etas.push_back(r.eta_observed);
  }
  // Vertex sets are nested, so the discrete max can only grow per trial.
  CHECK(etas[1] <= etas[0] + 1e-12);
  CHECK(etas[2] <= etas[1] + 1e-12);
}

TEST_CASE("p=2 eta stays controlled under refinement") {
  SplitMix64 rng(86);
  Mesh mesh = triangulate(testutil::random_scattered_set(rng, 6));
  std::vector<double> etas;
  for (int level = 0; level <= 3; ++level) {
    if (level > 0) mesh = refine_uniform(mesh, 1);
    const MZReport r =
        mz_ensemble_polygon(polygon_weights(mesh), 2.0, 2, 20, 777, mz_cfg());
    etas.push_back(r.eta_observed);
  }
  for (std::size_t k = 0; k + 1 < etas.size(); ++k) CHECK(etas[k + 1] <= 2.0 * etas[k]);
}

TEST_CASE("single-triangle polygon matches the d=1 triangle ratio") {
  const Polygon tri_poly({{0.2, 0.1}, {1.4, 0.3}, {0.5, 1.2}});
  const Mesh mesh = triangulate(ScatteredSet(tri_poly, {}));
  REQUIRE(mesh.count() == 1);
  const PolygonRule rule = polygon_weights(mesh);
  const Triangle t(tri_poly.vertices()[0], tri_poly.vertices()[1], tri_poly.vertices()[2]);
  for (int trial = 0; trial < 3; ++trial) {
    const PolySample chi = sample_polynomial(2, 3100 + static_cast<unsigned>(trial));
    for (double p : {1.0, 2.0, kInfinity}) {
      const double a = mz_ratio_triangle(t, 1, p, chi, mz_cfg());
      const double b = mz_ratio_polygon(rule, p, chi, mz_cfg());
      CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, a));
    }
  }
}

TEST_CASE("csv serialization") {
  MZReport r;
  r.p = kInfinity;
  r.N = 4;
  r.rule_id = "poly";
  r.mesh_size = 0.5;
  r.tri_count = 24;
  r.trials = 100;
  r.ratio_min = 0.875;
  r.ratio_mean = 0.9375;
  r.ratio_max = 1.0;
  r.eta_observed = 0.125;
  r.discarded = 2;
  CHECK(mz_csv_header() ==
        "p,N,rule,mesh_size,tri_count,trials,ratio_min,ratio_mean,ratio_max,"
        "eta_observed,discarded");
  CHECK(mz_csv_row(r) == "inf,4,poly,0.5,24,100,0.875,0.9375,1,0.125,2");
}

TEST_SUITE_END();
