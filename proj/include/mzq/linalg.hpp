#ifndef MZQ_LINALG_HPP
#define MZQ_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mzq {

// Row-major dense square matrix, just large enough for the collocation
// solves (n <= 91).
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  double norm_inf() const; // max absolute row sum

private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// LU factorization with partial pivoting. Solves against A and A^T share the
// one factorization. Residuals are polished with one step of iterative
// refinement using the original matrix.
class LuFactorization {
public:
  explicit LuFactorization(DenseMatrix a);

  bool singular() const { return singular_; }
  std::size_t size() const { return lu_.size(); }

  // Solve A x = b (or A^T x = b), overwriting x. Includes one refinement step.
  void solve(std::span<const double> b, std::span<double> x) const;
  void solve_transposed(std::span<const double> b, std::span<double> x) const;

  // Max-norm of the residual b - A x (resp. b - A^T x).
  double residual_inf(std::span<const double> b, std::span<const double> x,
                      bool transposed) const;

  // Hager-style estimate of the infinity-norm condition number.
  double condition_estimate() const;

private:
  void substitute(std::span<double> x) const;            // L U x = P b
  void substitute_transposed(std::span<double> x) const; // U^T L^T (P x) = b

  DenseMatrix original_;
  DenseMatrix lu_;
  std::vector<std::size_t> pivots_;
  bool singular_ = false;
};

} // namespace mzq

#endif
