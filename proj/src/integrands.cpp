#include "mzq/integrands.hpp"

#include "mzq/expr.hpp"

#include <cmath>

namespace mzq {

std::optional<Integrand> builtin_integrand(const std::string& name) {
  if (name == "f1")
    return Integrand([](Point2 p) {
      const double u = p.x + 2.0 * p.y - 7.0;
      const double v = 2.0 * p.x + p.y - 5.0;
      return u * u + v * v;
    });
  if (name == "f2")
    return Integrand([](Point2 p) {
      return 100.0 * std::sqrt(std::fabs(p.y - 0.01 * p.x * p.x)) +
             0.01 * std::fabs(p.x + 10.0);
    });
  if (name == "f3")
    return Integrand([](Point2 p) {
      const double d = p.x - p.y;
      return std::sin(p.x + p.y) + d * d - 1.5 * p.x + 2.5 * p.y + 1.0;
    });
  return std::nullopt;
}

Integrand make_integrand(const std::string& name_or_expression) {
  if (auto f = builtin_integrand(name_or_expression)) return *f;
  const expr::Expr e = expr::Expr::parse(name_or_expression);
  return [e](Point2 p) { return e.eval(p.x, p.y); };
}

} // namespace mzq
