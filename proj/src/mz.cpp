#include "mzq/mz.hpp"

#include "mzq/error.hpp"
#include "mzq/rng.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace mzq {

namespace {

std::size_t poly_dim(int N) { return static_cast<std::size_t>((N + 1) * (N + 2) / 2); }

} // namespace

PolySample::PolySample(int degree, std::vector<double> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0 || degree_ > 64)
    throw Error("BadDegree", "polynomial degree must be in [0, 64]");
  if (coeffs_.size() != poly_dim(degree_))
    throw Error("IndexDegreeMismatch", "coefficient count does not match degree");
}

namespace {
constexpr int kMaxSampleDegree = 64;
}

double PolySample::eval(Point2 p) const {
  // Direct summation over monomials, total degree ascending, a descending.
  double xp[kMaxSampleDegree + 1], yp[kMaxSampleDegree + 1];
  xp[0] = yp[0] = 1.0;
  for (int k = 1; k <= degree_; ++k) {
    xp[k] = xp[k - 1] * p.x;
    yp[k] = yp[k - 1] * p.y;
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (int t = 0; t <= degree_; ++t)
    for (int a = t; a >= 0; --a) sum += coeffs_[n++] * xp[a] * yp[t - a];
  return sum;
}

Integrand PolySample::integrand() const {
  return [copy = *this](Point2 p) { return copy.eval(p); };
}

PolySample PolySample::scaled(double factor) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= factor;
  return PolySample(degree_, std::move(c));
}

PolySample sample_polynomial(int N, std::uint64_t seed) {
  if (N < 0) throw Error("BadDegree", "polynomial degree must be >= 0");
  SplitMix64 rng(seed);
  std::vector<double> coeffs(poly_dim(N));
  for (double& c : coeffs) c = rng.next_symmetric();
  return PolySample(N, std::move(coeffs));
}

namespace {

constexpr double kDegenerateNorm = 1e-14;

struct RatioOutcome {
  double ratio = 0.0;
  bool degenerate = false;
  bool oracle_reject = false;
};

void check_mz_degree(int d) {
  if (d != 1 && d != 3 && d != 5)
    throw Error("BadDegree", "MZ triangle rules require d in {1, 3, 5}");
}

RatioOutcome ratio_triangle(const Triangle& t, int d, double p, const PolySample& chi,
                            const OracleConfig& cfg) {
  const TriangleRule rule = triangle_weights(t, d);
  RatioOutcome out;
  if (p == kInfinity) {
    double num = 0.0;
    for (const Point2& q : rule.points) num = std::max(num, std::fabs(chi.eval(q)));
    const double den = lp_norm(t, chi.integrand(), kInfinity, cfg);
    if (den < kDegenerateNorm) {
      out.degenerate = true;
      return out;
    }
    out.ratio = num / den;
    return out;
  }
  double num = 0.0;
  for (std::size_t n = 0; n < rule.points.size(); ++n)
    num += rule.weights[n] * std::pow(std::fabs(chi.eval(rule.points[n])), p);
  const Integrand powf = [&chi, p](Point2 q) {
    return std::pow(std::fabs(chi.eval(q)), p);
  };
  const IntegrationResult den = integrate_triangle(t, powf, cfg);
  if (std::pow(den.value, 1.0 / p) < kDegenerateNorm) {
    out.degenerate = true;
    return out;
  }
  out.oracle_reject = den.error_estimate > 1e-6 * std::fabs(den.value);
  out.ratio = num / den.value;
  return out;
}

RatioOutcome ratio_polygon(const PolygonRule& r, double p, const PolySample& chi,
                           const OracleConfig& cfg) {
  RatioOutcome out;
  const auto& pts = r.mesh.vertices();
  if (p == kInfinity) {
    double num = 0.0;
    for (const Point2& q : pts) num = std::max(num, std::fabs(chi.eval(q)));
    const double den = lp_norm(r.mesh, chi.integrand(), kInfinity, cfg);
    if (den < kDegenerateNorm) {
      out.degenerate = true;
      return out;
    }
    out.ratio = num / den;
    return out;
  }
  double num = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j)
    num += r.weights[j] * std::pow(std::fabs(chi.eval(pts[j])), p);
  const Integrand powf = [&chi, p](Point2 q) {
    return std::pow(std::fabs(chi.eval(q)), p);
  };
  const IntegrationResult den = integrate_polygon(r.mesh, powf, cfg);
  if (std::pow(den.value, 1.0 / p) < kDegenerateNorm) {
    out.degenerate = true;
    return out;
  }
  out.oracle_reject = den.error_estimate > 1e-6 * std::fabs(den.value);
  out.ratio = num / den.value;
  return out;
}

void validate_p(double p) {
  if (p != kInfinity && !(p >= 1.0))
    throw Error("DegenerateInput", "p must be >= 1 or infinity");
}

template <typename RatioFn>
MZReport run_ensemble(RatioFn&& one_trial, double p, int N, int trials,
                      std::uint64_t seed, bool parallel) {
  if (trials < 1) throw Error("DegenerateInput", "trials must be >= 1");
  std::vector<RatioOutcome> outcomes(static_cast<std::size_t>(trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (int i = 0; i < trials; ++i) {
    const PolySample chi = sample_polynomial(N, seed ^ static_cast<std::uint64_t>(i));
    outcomes[static_cast<std::size_t>(i)] = one_trial(chi);
  }

  MZReport rep;
  rep.p = p;
  rep.N = N;
  rep.trials = trials;
  double sum = 0.0;
  int kept = 0;
  rep.ratio_min = std::numeric_limits<double>::infinity();
  rep.ratio_max = -std::numeric_limits<double>::infinity();
  for (const RatioOutcome& o : outcomes) {
    if (o.degenerate || o.oracle_reject) {
      ++rep.discarded;
      continue;
    }
    ++kept;
    sum += o.ratio;
    rep.ratio_min = std::min(rep.ratio_min, o.ratio);
    rep.ratio_max = std::max(rep.ratio_max, o.ratio);
  }
  if (kept == 0) throw Error("DegeneratePolynomial", "all ensemble trials were discarded");
  rep.ratio_mean = sum / kept;
  rep.eta_observed = std::max(rep.ratio_max - 1.0, 1.0 - rep.ratio_min);
  return rep;
}

} // namespace

double mz_ratio_triangle(const Triangle& t, int d, double p, const PolySample& chi,
                         const OracleConfig& cfg) {
  check_mz_degree(d);
  validate_p(p);
  const RatioOutcome out = ratio_triangle(t, d, p, chi, cfg);
  if (out.degenerate)
    throw Error("DegeneratePolynomial", "polynomial norm below 1e-14");
  return out.ratio;
}

double mz_ratio_polygon(const PolygonRule& r, double p, const PolySample& chi,
                        const OracleConfig& cfg) {
  validate_p(p);
  const RatioOutcome out = ratio_polygon(r, p, chi, cfg);
  if (out.degenerate)
    throw Error("DegeneratePolynomial", "polynomial norm below 1e-14");
  return out.ratio;
}

namespace {

MZReport ensemble_triangle_impl(const Triangle& t, int d, double p, int N, int trials,
                                std::uint64_t seed, const OracleConfig& cfg,
                                bool parallel) {
  check_mz_degree(d);
  validate_p(p);
  MZReport rep = run_ensemble(
      [&](const PolySample& chi) { return ratio_triangle(t, d, p, chi, cfg); }, p, N,
      trials, seed, parallel);
  rep.rule_id = "tri-d" + std::to_string(d);
  rep.mesh_size = t.longest_edge();
  rep.tri_count = 1;
  return rep;
}

MZReport ensemble_polygon_impl(const PolygonRule& r, double p, int N, int trials,
                               std::uint64_t seed, const OracleConfig& cfg,
                               bool parallel) {
  validate_p(p);
  MZReport rep = run_ensemble(
      [&](const PolySample& chi) { return ratio_polygon(r, p, chi, cfg); }, p, N, trials,
      seed, parallel);
  rep.rule_id = "poly";
  rep.mesh_size = r.mesh.size();
  rep.tri_count = r.mesh.count();
  return rep;
}

} // namespace

MZReport mz_ensemble_triangle(const Triangle& t, int d, double p, int N, int trials,
                              std::uint64_t seed, const OracleConfig& cfg) {
  return ensemble_triangle_impl(t, d, p, N, trials, seed, cfg, true);
}

MZReport mz_ensemble_polygon(const PolygonRule& r, double p, int N, int trials,
                             std::uint64_t seed, const OracleConfig& cfg) {
  return ensemble_polygon_impl(r, p, N, trials, seed, cfg, true);
}

MZReport mz_ensemble_triangle_serial(const Triangle& t, int d, double p, int N,
                                     int trials, std::uint64_t seed,
                                     const OracleConfig& cfg) {
  return ensemble_triangle_impl(t, d, p, N, trials, seed, cfg, false);
}

MZReport mz_ensemble_polygon_serial(const PolygonRule& r, double p, int N, int trials,
                                    std::uint64_t seed, const OracleConfig& cfg) {
  return ensemble_polygon_impl(r, p, N, trials, seed, cfg, false);
}

std::string mz_csv_header() {
  return "p,N,rule,mesh_size,tri_count,trials,ratio_min,ratio_mean,ratio_max,"
         "eta_observed,discarded";
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

std::string mz_csv_row(const MZReport& r) {
  std::string row;
  if (r.p == kInfinity)
    row += "inf";
  else {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", r.p);
    row += buf;
  }
  row += "," + std::to_string(r.N);
  row += "," + r.rule_id;
  row += "," + format_double(r.mesh_size);
  row += "," + std::to_string(r.tri_count);
  row += "," + std::to_string(r.trials);
  row += "," + format_double(r.ratio_min);
  row += "," + format_double(r.ratio_mean);
  row += "," + format_double(r.ratio_max);
  row += "," + format_double(r.eta_observed);
  row += "," + std::to_string(r.discarded);
  return row;
}

} // namespace mzq
