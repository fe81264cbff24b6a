#include "mzq/linalg.hpp"

#include "mzq/error.hpp"

#include <cmath>
#include <numeric>

namespace mzq {

double DenseMatrix::norm_inf() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < n_; ++c) sum += std::fabs((*this)(r, c));
    worst = std::max(worst, sum);
  }
  return worst;
}

LuFactorization::LuFactorization(DenseMatrix a)
    : original_(a), lu_(std::move(a)), pivots_(lu_.size()) {
  const std::size_t n = lu_.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(lu_(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double v = std::fabs(lu_(r, k));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    pivots_[k] = piv;
    if (best == 0.0) {
      singular_ = true;
      return;
    }
    if (piv != k)
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(piv, c));
    const double inv = 1.0 / lu_(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double m = lu_(r, k) * inv;
      lu_(r, k) = m;
      if (m != 0.0)
        for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= m * lu_(k, c);
    }
  }
}

void LuFactorization::substitute(std::span<double> x) const {
  const std::size_t n = lu_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
  for (std::size_t r = 1; r < n; ++r) {
    double sum = x[r];
    for (std::size_t c = 0; c < r; ++c) sum -= lu_(r, c) * x[c];
    x[r] = sum;
  }
  for (std::size_t rr = n; rr-- > 0;) {
    double sum = x[rr];
    for (std::size_t c = rr + 1; c < n; ++c) sum -= lu_(rr, c) * x[c];
    x[rr] = sum / lu_(rr, rr);
  }
}

void LuFactorization::substitute_transposed(std::span<double> x) const {
  const std::size_t n = lu_.size();
  // U^T y = b: forward substitution on the transposed upper factor.
  for (std::size_t r = 0; r < n; ++r) {
    double sum = x[r];
    for (std::size_t c = 0; c < r; ++c) sum -= lu_(c, r) * x[c];
    x[r] = sum / lu_(r, r);
  }
  // L^T w = y: back substitution, unit diagonal.
  for (std::size_t rr = n; rr-- > 0;) {
    double sum = x[rr];
    for (std::size_t c = rr + 1; c < n; ++c) sum -= lu_(c, rr) * x[c];
    x[rr] = sum;
  }
  for (std::size_t kk = n; kk-- > 0;)
    if (pivots_[kk] != kk) std::swap(x[kk], x[pivots_[kk]]);
}

namespace {

void check_solvable(bool singular) {
  if (singular)
    throw Error("IllConditionedCollocation", "matrix is singular to working precision");
}

} // namespace

void LuFactorization::solve(std::span<const double> b, std::span<double> x) const {
  check_solvable(singular_);
  const std::size_t n = lu_.size();
  std::vector<double> work(b.begin(), b.end());
  substitute(work);
  // One step of iterative refinement with long double residual accumulation.
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = b[i];
    for (std::size_t j = 0; j < n; ++j)
      acc -= static_cast<long double>(original_(i, j)) * work[j];
    r[i] = static_cast<double>(acc);
  }
  substitute(r);
  for (std::size_t i = 0; i < n; ++i) x[i] = work[i] + r[i];
}

void LuFactorization::solve_transposed(std::span<const double> b, std::span<double> x) const {
  check_solvable(singular_);
  const std::size_t n = lu_.size();
  std::vector<double> work(b.begin(), b.end());
  substitute_transposed(work);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = b[i];
    for (std::size_t j = 0; j < n; ++j)
      acc -= static_cast<long double>(original_(j, i)) * work[j];
    r[i] = static_cast<double>(acc);
  }
  substitute_transposed(r);
  for (std::size_t i = 0; i < n; ++i) x[i] = work[i] + r[i];
}

double LuFactorization::residual_inf(std::span<const double> b, std::span<const double> x,
                                     bool transposed) const {
  const std::size_t n = lu_.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = b[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = transposed ? original_(j, i) : original_(i, j);
      acc -= static_cast<long double>(aij) * x[j];
    }
    worst = std::max(worst, static_cast<double>(std::fabs(static_cast<double>(acc))));
  }
  return worst;
}

double LuFactorization::condition_estimate() const {
  if (singular_) return std::numeric_limits<double>::infinity();
  const std::size_t n = lu_.size();
  // Hager's estimator for ||A^{-T}||_1 == ||A^{-1}||_inf.
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n), z(n);
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    solve_transposed(x, y);
    est = 0.0;
    for (double v : y) est += std::fabs(v);
    std::vector<double> xi(n);
    for (std::size_t i = 0; i < n; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
    solve(xi, z);
    double zmax = 0.0;
    std::size_t jmax = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::fabs(z[i]) > zmax) {
        zmax = std::fabs(z[i]);
        jmax = i;
      }
    const double ztx = std::inner_product(z.begin(), z.end(), x.begin(), 0.0);
    if (zmax <= ztx) break;
    std::fill(x.begin(), x.end(), 0.0);
    x[jmax] = 1.0;
  }
  return est * original_.norm_inf();
}

} // namespace mzq
