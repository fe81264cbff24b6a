#ifndef MZQ_MZ_HPP
#define MZQ_MZ_HPP

#include "mzq/oracle.hpp"
#include "mzq/poly_rule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mzq {

// Random bivariate polynomial in the monomial basis {x^a y^b : a + b <= N}.
// Ordering: total degree ascending, then a descending (x^t first).
class PolySample {
public:
  PolySample(int degree, std::vector<double> coeffs);

  int degree() const { return degree_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double eval(Point2 p) const;
  Integrand integrand() const;

  PolySample scaled(double factor) const;

private:
  int degree_;
  std::vector<double> coeffs_;
};

// Coefficients i.i.d. uniform on [-1, 1) from SplitMix64 seeded with `seed`,
// drawn in the coefficient ordering above.
PolySample sample_polynomial(int N, std::uint64_t seed);

// Discrete-to-continuous L^p ratio of |chi| for the degree-d triangle rule:
//   finite p: sum w |chi(xi)|^p / integral of |chi|^p,
//   p = inf : max |chi(xi)| / sup |chi|.
// d must be 1, 3, or 5 (positive weights). Throws DegeneratePolynomial when
// the denominator is below 1e-14.
double mz_ratio_triangle(const Triangle& t, int d, double p, const PolySample& chi,
                         const OracleConfig& cfg = {});

// Same ratio for the scattered-point polygon rule.
double mz_ratio_polygon(const PolygonRule& r, double p, const PolySample& chi,
                        const OracleConfig& cfg = {});

struct MZReport {
  double p = 2.0;       // infinity() for the sup-norm case
  int N = 0;            // polynomial degree of the samples
  std::string rule_id;  // "tri-d<k>" or "poly"
  double mesh_size = 0; // |T| for triangles, longest mesh edge for polygons
  int tri_count = 1;
  int trials = 0;
  double ratio_min = 0.0;
  double ratio_mean = 0.0;
  double ratio_max = 0.0;
  double eta_observed = 0.0; // max(ratio_max - 1, 1 - ratio_min)
  int discarded = 0;         // degenerate or oracle-rejected trials
};

// Ensemble over `trials` sampled polynomials; trial i is seeded with
// seed ^ i. Trials whose oracle denominator carries an error estimate above
// 1e-6 of its value are discarded and counted. Aggregation runs in trial
// order, so reports are identical no matter how many threads ran the trials.
MZReport mz_ensemble_triangle(const Triangle& t, int d, double p, int N, int trials,
                              std::uint64_t seed, const OracleConfig& cfg = {});
MZReport mz_ensemble_polygon(const PolygonRule& r, double p, int N, int trials,
                             std::uint64_t seed, const OracleConfig& cfg = {});

// Plain-loop reference implementations of the ensembles.
MZReport mz_ensemble_triangle_serial(const Triangle& t, int d, double p, int N,
                                     int trials, std::uint64_t seed,
                                     const OracleConfig& cfg = {});
MZReport mz_ensemble_polygon_serial(const PolygonRule& r, double p, int N, int trials,
                                    std::uint64_t seed, const OracleConfig& cfg = {});

std::string mz_csv_header();
std::string mz_csv_row(const MZReport& report);

} // namespace mzq

#endif
