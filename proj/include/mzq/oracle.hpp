#ifndef MZQ_ORACLE_HPP
#define MZQ_ORACLE_HPP

#include "mzq/mesh.hpp"
#include "mzq/tri_rule.hpp"

#include <limits>

namespace mzq {

struct OracleConfig {
  double tolerance = 1e-12;  // target relative error
  int max_subdivisions = 22; // quartering depth limit
  int base_degree = 5;       // per-cell rule; must be 1, 3, or 5
  long max_regions = 2000000;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false; // false means the subdivision budget ran out
  long evaluations = 0;
  const char* status() const { return converged ? "ok" : "OracleBudgetExceeded"; }
};

// Adaptive quartering driven by a worst-first priority queue. Each cell is
// estimated with the base-degree rule; its local error is the difference
// between the cell estimate and the sum of its four children's estimates.
IntegrationResult integrate_triangle(const Triangle& t, const Integrand& f,
                                     const OracleConfig& cfg = {});

// Per-triangle adaptive integration with the relative tolerance shared as
// absolute per-triangle budgets; summed in mesh order so the result does not
// depend on thread count. The plain-loop variant is the reference
// implementation for the OpenMP one.
IntegrationResult integrate_polygon(const Mesh& m, const Integrand& f,
                                    const OracleConfig& cfg = {});
IntegrationResult integrate_polygon_serial(const Mesh& m, const Integrand& f,
                                           const OracleConfig& cfg = {});

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// L^p norm of f: adaptive integration of |f|^p for finite p; for p = inf a
// barycentric-lattice max with two local refinement rounds per triangle.
// The lattice includes all domain points of degrees 1, 3, 5, so sampled
// suprema dominate those rules' node values.
double lp_norm(const Triangle& t, const Integrand& f, double p,
               const OracleConfig& cfg = {});
double lp_norm(const Mesh& m, const Integrand& f, double p, const OracleConfig& cfg = {});

} // namespace mzq

#endif
