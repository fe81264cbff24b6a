#ifndef MZQ_INTEGRANDS_HPP
#define MZQ_INTEGRANDS_HPP

#include "mzq/tri_rule.hpp"

#include <optional>
#include <string>

namespace mzq {

// Built-in test integrands:
//   f1(x,y) = (x + 2y - 7)^2 + (2x + y - 5)^2
//   f2(x,y) = 100 sqrt(|y - 0.01 x^2|) + 0.01 |x + 10|
//   f3(x,y) = sin(x + y) + (x - y)^2 - 1.5x + 2.5y + 1
std::optional<Integrand> builtin_integrand(const std::string& name);

// Built-in by name, otherwise parsed as an expression in x and y.
Integrand make_integrand(const std::string& name_or_expression);

} // namespace mzq

#endif
