#ifndef MZQ_EXPR_HPP
#define MZQ_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

namespace mzq::expr {

// Arithmetic expressions in x and y: literals, + - * / ^ with the usual
// precedence (^ right-associative, binding tighter than unary minus), and
// the unary functions sin, cos, exp, sqrt, abs, log. Parse errors carry the
// byte offset and the expected token in the message.
class Expr {
public:
  static Expr parse(std::string_view src); // throws Error("ParseError", ...)

  double eval(double x, double y) const; // IEEE semantics; domain errors yield NaN

  std::string pretty() const;

  bool same_structure(const Expr& other) const;

  struct Node;

private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

} // namespace mzq::expr

#endif
