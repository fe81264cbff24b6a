#include "mzq/oracle.hpp"

#include "mzq/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <queue>
#include <sstream>

namespace mzq {

namespace {

void validate(const OracleConfig& cfg) {
  if (!(cfg.tolerance > 0.0))
    throw Error("DegenerateInput", "oracle tolerance must be positive");
  if (cfg.base_degree != 1 && cfg.base_degree != 3 && cfg.base_degree != 5)
    throw Error("BadDegree", "oracle base degree must be 1, 3, or 5");
  if (cfg.max_subdivisions < 0)
    throw Error("DegenerateInput", "max_subdivisions must be >= 0");
}

using TriPts = std::array<Point2, 3>;

std::array<TriPts, 4> quarter(const TriPts& t) {
  const Point2 mab = 0.5 * (t[0] + t[1]);
  const Point2 mbc = 0.5 * (t[1] + t[2]);
  const Point2 mca = 0.5 * (t[2] + t[0]);
  return {TriPts{t[0], mab, mca}, TriPts{mab, t[1], mbc}, TriPts{mca, mbc, t[2]},
          TriPts{mab, mbc, mca}};
}

double tri_area(const TriPts& t) { return std::fabs(signed_area(t[0], t[1], t[2])); }

// One adaptive run over a single triangle. Cells are stored append-only so
// creation indices never change; the final sums run over leaves in creation
// order, which keeps results independent of the pop order details.
class AdaptiveRun {
public:
  AdaptiveRun(const Integrand& f, const OracleConfig& cfg, double abs_tol)
      : f_(f), cfg_(cfg), abs_tol_(abs_tol) {
    const IndexOrder order(cfg.base_degree);
    const std::vector<double> w = normalized_triangle_weights(cfg.base_degree);
    nodes_.reserve(order.size());
    for (std::size_t n = 0; n < order.size(); ++n) {
      const MultiIndex& idx = order[n];
      nodes_.push_back({idx.i / static_cast<double>(cfg.base_degree),
                        idx.j / static_cast<double>(cfg.base_degree),
                        idx.k / static_cast<double>(cfg.base_degree), w[n]});
    }
  }

  IntegrationResult run(const TriPts& root) {
    make_cell(root, estimate(root), 0);
    running_value_ = cells_[0].refined;
    running_error_ = cells_[0].err;
    running_abs_ = std::fabs(cells_[0].refined);

    bool converged = done();
    while (!converged) {
      if (heap_.empty()) break; // every leaf is at max depth
      if (static_cast<long>(cells_.size()) > cfg_.max_regions) break;
      const auto [err, neg_idx] = heap_.top();
      (void)err;
      heap_.pop();
      const std::size_t idx = static_cast<std::size_t>(-neg_idx);
      Cell& cell = cells_[idx];
      if (!cell.leaf) continue; // stale heap entry
      if (cell.level >= cfg_.max_subdivisions) continue; // frozen at depth cap
      split(idx);
      converged = done();
    }

    IntegrationResult out;
    double value = 0.0, error = 0.0;
    for (const Cell& c : cells_)
      if (c.leaf) {
        value += c.refined;
        error += c.err;
      }
    out.value = value;
    out.error_estimate = error;
    out.converged = converged;
    out.evaluations = evals_;
    return out;
  }

private:
  struct Node {
    double b1, b2, b3, w;
  };
  struct Cell {
    TriPts tri;
    double self = 0.0;                  // base-rule estimate on this cell
    std::array<double, 4> child{};      // estimates on the four quarters
    double refined = 0.0;               // sum of child estimates
    double err = 0.0;                   // |self - refined|
    int level = 0;
    bool leaf = true;
  };

  double estimate(const TriPts& t) {
    const double area = tri_area(t);
    double sum = 0.0;
    for (const Node& n : nodes_) {
      const Point2 p = n.b1 * t[0] + n.b2 * t[1] + n.b3 * t[2];
      const double v = f_(p);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrand not finite at (" << p.x << ", " << p.y << ")";
        throw Error("NonFiniteSample", msg.str());
      }
      sum += n.w * v;
    }
    evals_ += static_cast<long>(nodes_.size());
    return area * sum;
  }

  std::size_t make_cell(const TriPts& t, double self, int level) {
    Cell c;
    c.tri = t;
    c.self = self;
    c.level = level;
    const std::array<TriPts, 4> children = quarter(t);
    double refined = 0.0;
    for (int i = 0; i < 4; ++i) {
      c.child[static_cast<std::size_t>(i)] = estimate(children[static_cast<std::size_t>(i)]);
      refined += c.child[static_cast<std::size_t>(i)];
    }
    c.refined = refined;
    c.err = std::fabs(c.self - refined);
    const std::size_t idx = cells_.size();
    cells_.push_back(c);
    if (level < cfg_.max_subdivisions)
      heap_.push({c.err, -static_cast<long>(idx)});
    return idx;
  }

  void split(std::size_t idx) {
    const Cell parent = cells_[idx]; // copy: make_cell may reallocate
    cells_[idx].leaf = false;
    running_value_ -= parent.refined;
    running_error_ -= parent.err;
    running_abs_ -= std::fabs(parent.refined);
    const std::array<TriPts, 4> children = quarter(parent.tri);
    for (int i = 0; i < 4; ++i) {
      const std::size_t ci =
          make_cell(children[static_cast<std::size_t>(i)],
                    parent.child[static_cast<std::size_t>(i)], parent.level + 1);
      running_value_ += cells_[ci].refined;
      running_error_ += cells_[ci].err;
      running_abs_ += std::fabs(cells_[ci].refined);
    }
  }

  bool done() const {
    const double scale =
        std::max(std::fabs(running_value_), 1e-3 * running_abs_); // guards near-zero totals
    if (abs_tol_ > 0.0 && running_error_ <= abs_tol_) return true;
    return running_error_ <= cfg_.tolerance * scale;
  }

  const Integrand& f_;
  OracleConfig cfg_;
  double abs_tol_;
  std::vector<Node> nodes_;
  std::vector<Cell> cells_;
  std::priority_queue<std::pair<double, long>> heap_;
  double running_value_ = 0.0;
  double running_error_ = 0.0;
  double running_abs_ = 0.0;
  long evals_ = 0;
};

IntegrationResult integrate_tri_impl(const TriPts& t, const Integrand& f,
                                     const OracleConfig& cfg, double abs_tol) {
  AdaptiveRun run(f, cfg, abs_tol);
  return run.run(t);
}

} // namespace

IntegrationResult integrate_triangle(const Triangle& t, const Integrand& f,
                                     const OracleConfig& cfg) {
  validate(cfg);
  return integrate_tri_impl({t.v1(), t.v2(), t.v3()}, f, cfg, 0.0);
}

namespace {

IntegrationResult integrate_polygon_impl(const Mesh& m, const Integrand& f,
                                         const OracleConfig& cfg, bool parallel) {
  validate(cfg);
  const int count = m.count();
  if (count == 1) return integrate_triangle(m.triangle(0), f, cfg);

  // Coarse pass fixes the shared absolute budget per triangle.
  double coarse_abs = 0.0;
  for (int i = 0; i < count; ++i) {
    const Triangle t = m.triangle(static_cast<std::size_t>(i));
    OracleConfig coarse = cfg;
    coarse.max_subdivisions = 0;
    coarse.tolerance = 1.0;
    const IntegrationResult r =
        integrate_tri_impl({t.v1(), t.v2(), t.v3()}, f, coarse, 0.0);
    coarse_abs += std::fabs(r.value);
  }
  const double abs_tol = cfg.tolerance * std::max(coarse_abs, 1e-300) /
                         static_cast<double>(count);

  std::vector<IntegrationResult> results(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < count; ++i) {
    const Triangle t = m.triangle(static_cast<std::size_t>(i));
    results[static_cast<std::size_t>(i)] =
        integrate_tri_impl({t.v1(), t.v2(), t.v3()}, f, cfg, abs_tol);
  }

  IntegrationResult total;
  total.converged = true;
  for (const IntegrationResult& r : results) {
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.converged = total.converged && r.converged;
    total.evaluations += r.evaluations;
  }
  return total;
}

} // namespace

IntegrationResult integrate_polygon(const Mesh& m, const Integrand& f,
                                    const OracleConfig& cfg) {
  return integrate_polygon_impl(m, f, cfg, true);
}

IntegrationResult integrate_polygon_serial(const Mesh& m, const Integrand& f,
                                           const OracleConfig& cfg) {
  return integrate_polygon_impl(m, f, cfg, false);
}

namespace {

constexpr int kSupLattice = 30; // divisible by 1, 3, 5: covers those rules' nodes

double sup_on_triangle(const TriPts& t, const Integrand& f, long& evals) {
  TriPts cur = t;
  double best = -kInfinity;
  Point2 best_pt = t[0];
  for (int round = 0; round < 3; ++round) {
    for (int i = 0; i <= kSupLattice; ++i)
      for (int j = 0; j <= kSupLattice - i; ++j) {
        const double b1 = static_cast<double>(i) / kSupLattice;
        const double b2 = static_cast<double>(j) / kSupLattice;
        const double b3 = 1.0 - b1 - b2;
        const Point2 p = b1 * cur[0] + b2 * cur[1] + b3 * cur[2];
        const double v = std::fabs(f(p));
        ++evals;
        if (v > best) {
          best = v;
          best_pt = p;
        }
      }
    // Shrink around the running maximizer for the next round.
    const double s = 3.0 / kSupLattice;
    for (Point2& v : cur) v = best_pt + s * (v - best_pt);
  }
  return best;
}

} // namespace

double lp_norm(const Triangle& t, const Integrand& f, double p, const OracleConfig& cfg) {
  validate(cfg);
  if (p == kInfinity) {
    long evals = 0;
    return sup_on_triangle({t.v1(), t.v2(), t.v3()}, f, evals);
  }
  if (!(p >= 1.0)) throw Error("DegenerateInput", "lp_norm requires p >= 1");
  const Integrand powf = [&f, p](Point2 q) { return std::pow(std::fabs(f(q)), p); };
  const IntegrationResult r = integrate_triangle(t, powf, cfg);
  return std::pow(r.value, 1.0 / p);
}

double lp_norm(const Mesh& m, const Integrand& f, double p, const OracleConfig& cfg) {
  validate(cfg);
  if (p == kInfinity) {
    long evals = 0;
    double best = -kInfinity;
    for (int i = 0; i < m.count(); ++i) {
      const Triangle t = m.triangle(static_cast<std::size_t>(i));
      best = std::max(best, sup_on_triangle({t.v1(), t.v2(), t.v3()}, f, evals));
    }
    return best;
  }
  if (!(p >= 1.0)) throw Error("DegenerateInput", "lp_norm requires p >= 1");
  const Integrand powf = [&f, p](Point2 q) { return std::pow(std::fabs(f(q)), p); };
  const IntegrationResult r = integrate_polygon(m, powf, cfg);
  return std::pow(r.value, 1.0 / p);
}

} // namespace mzq
