#include "mzq/expr.hpp"

#include "mzq/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace mzq::expr {

struct Expr::Node {
  enum class Kind { Number, Var, Neg, Binary, Call };
  Kind kind;
  double number = 0.0;
  char var = 'x';
  char op = '+';    // for Binary
  std::string func; // for Call
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Number;
  n->number = v;
  return n;
}

NodePtr make_var(char v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Var;
  n->var = v;
  return n;
}

NodePtr make_neg(NodePtr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Neg;
  n->lhs = std::move(operand);
  return n;
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_call(std::string func, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Call;
  n->func = std::move(func);
  n->lhs = std::move(arg);
  return n;
}

bool known_function(const std::string& name) {
  return name == "sin" || name == "cos" || name == "exp" || name == "sqrt" ||
         name == "abs" || name == "log";
}

[[noreturn]] void fail(std::size_t offset, const std::string& expected) {
  throw Error("ParseError", "at byte " + std::to_string(offset) + ": " + expected);
}

// Precedence-climbing parser. Binding powers: + - (10), * / (20),
// unary - (30), ^ (40, right-associative).
class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = parse_expr(0);
    skip_space();
    if (pos_ != src_.size()) fail(pos_, "expected end of input");
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr parse_expr(int min_bp) {
    NodePtr lhs = parse_prefix();
    for (;;) {
      const char c = peek();
      int bp = 0;
      if (c == '+' || c == '-') bp = 10;
      else if (c == '*' || c == '/') bp = 20;
      else if (c == '^') bp = 40;
      else break;
      if (bp <= min_bp) break;
      ++pos_;
      // Right associativity for ^: recurse at bp - 1.
      NodePtr rhs = parse_expr(c == '^' ? bp - 1 : bp);
      lhs = make_binary(c, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr parse_prefix() {
    const char c = peek();
    if (c == '\0') fail(pos_, "expected a value");
    if (c == '-') {
      ++pos_;
      return make_neg(parse_expr(30));
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr(0);
      if (peek() != ')') fail(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail(pos_, std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    skip_space();
    // strtod needs a terminated buffer; the view may not provide one.
    const std::string tail(src_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(tail.c_str(), &end);
    if (end == tail.c_str()) fail(pos_, "expected a number");
    pos_ += static_cast<std::size_t>(end - tail.c_str());
    return make_number(v);
  }

  NodePtr parse_identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (name == "x") return make_var('x');
    if (name == "y") return make_var('y');
    if (known_function(name)) {
      if (peek() != '(') fail(pos_, "expected '(' after function name");
      ++pos_;
      NodePtr arg = parse_expr(0);
      if (peek() != ')') fail(pos_, "expected ')'");
      ++pos_;
      return make_call(name, std::move(arg));
    }
    fail(start, "unknown identifier '" + name + "'");
  }
};

double eval_node(const Node& n, double x, double y) {
  switch (n.kind) {
    case Node::Kind::Number:
      return n.number;
    case Node::Kind::Var:
      return n.var == 'x' ? x : y;
    case Node::Kind::Neg:
      return -eval_node(*n.lhs, x, y);
    case Node::Kind::Binary: {
      const double a = eval_node(*n.lhs, x, y);
      const double b = eval_node(*n.rhs, x, y);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
      }
      return std::nan("");
    }
    case Node::Kind::Call: {
      const double a = eval_node(*n.lhs, x, y);
      if (n.func == "sin") return std::sin(a);
      if (n.func == "cos") return std::cos(a);
      if (n.func == "exp") return std::exp(a);
      if (n.func == "sqrt") return std::sqrt(a);
      if (n.func == "abs") return std::fabs(a);
      if (n.func == "log") return std::log(a);
      return std::nan("");
    }
  }
  return std::nan("");
}

std::string pretty_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", n.number);
      return buf;
    }
    case Node::Kind::Var:
      return std::string(1, n.var);
    case Node::Kind::Neg:
      return "(-" + pretty_node(*n.lhs) + ")";
    case Node::Kind::Binary:
      return "(" + pretty_node(*n.lhs) + n.op + pretty_node(*n.rhs) + ")";
    case Node::Kind::Call:
      return n.func + "(" + pretty_node(*n.lhs) + ")";
  }
  return "";
}

bool same_node(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Node::Kind::Number:
      return a.number == b.number;
    case Node::Kind::Var:
      return a.var == b.var;
    case Node::Kind::Neg:
      return same_node(*a.lhs, *b.lhs);
    case Node::Kind::Binary:
      return a.op == b.op && same_node(*a.lhs, *b.lhs) && same_node(*a.rhs, *b.rhs);
    case Node::Kind::Call:
      return a.func == b.func && same_node(*a.lhs, *b.lhs);
  }
  return false;
}

} // namespace

Expr Expr::parse(std::string_view src) { return Expr(Parser(src).parse()); }

double Expr::eval(double x, double y) const { return eval_node(*root_, x, y); }

std::string Expr::pretty() const { return pretty_node(*root_); }

bool Expr::same_structure(const Expr& other) const { return same_node(*root_, *other.root_); }

} // namespace mzq::expr
