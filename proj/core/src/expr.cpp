#include "rext/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace rext::expr {

namespace {

NodePtr make_node(Op op, double value = 0.0, int index = 0, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->value = value;
  n->index = index;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::Constant:
      if (n.value < 0 || std::signbit(n.value)) {
        out += "(-" + format_number(-n.value) + ")";
      } else {
        out += format_number(n.value);
      }
      return;
    case Op::Coordinate:
      out += "x" + std::to_string(n.index + 1);
      return;
    case Op::Neg:
      out += "(-";
      print(*n.lhs, out);
      out += ")";
      return;
    case Op::Sin:
    case Op::Cos:
    case Op::Exp:
    case Op::Log:
    case Op::Sqrt: {
      static constexpr const char* names[] = {"sin", "cos", "exp", "log", "sqrt"};
      out += names[static_cast<int>(n.op) - static_cast<int>(Op::Sin)];
      out += "(";
      print(*n.lhs, out);
      out += ")";
      return;
    }
    case Op::Pow:
      out += "(";
      print(*n.lhs, out);
      out += "^";
      if (n.value < 0) {
        out += "(-" + format_number(-n.value) + ")";
      } else {
        out += format_number(n.value);
      }
      out += ")";
      return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      static constexpr const char* syms[] = {" + ", " - ", " * ", " / "};
      out += "(";
      print(*n.lhs, out);
      out += syms[static_cast<int>(n.op) - static_cast<int>(Op::Add)];
      print(*n.rhs, out);
      out += ")";
      return;
    }
  }
}

std::string node_text(const Node& n) {
  std::string s;
  print(n, s);
  return s;
}

bool has_coordinates(const Node& n) {
  if (n.op == Op::Coordinate) return true;
  if (n.lhs && has_coordinates(*n.lhs)) return true;
  if (n.rhs && has_coordinates(*n.rhs)) return true;
  return false;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  NodePtr parse() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_node(Op::Add, 0, 0, lhs, term());
      } else if (accept('-')) {
        lhs = make_node(Op::Sub, 0, 0, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_node(Op::Mul, 0, 0, lhs, unary());
      } else if (accept('/')) {
        lhs = make_node(Op::Div, 0, 0, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_node(Op::Neg, 0, 0, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip_ws();
    if (accept('^')) {
      const std::size_t at = pos_;
      NodePtr exponent = unary();
      if (has_coordinates(*exponent)) throw ParseError("exponent must be constant", at);
      const double p = constant_value(*exponent);
      if (!std::isfinite(p)) throw ParseError("exponent is not finite", at);
      return make_node(Op::Pow, p, 0, base);
    }
    return base;
  }

  // Folds a coordinate-free subtree.
  double constant_value(const Node& n) const {
    switch (n.op) {
      case Op::Constant: return n.value;
      case Op::Neg: return -constant_value(*n.lhs);
      case Op::Sin: return std::sin(constant_value(*n.lhs));
      case Op::Cos: return std::cos(constant_value(*n.lhs));
      case Op::Exp: return std::exp(constant_value(*n.lhs));
      case Op::Log: return std::log(constant_value(*n.lhs));
      case Op::Sqrt: return std::sqrt(constant_value(*n.lhs));
      case Op::Add: return constant_value(*n.lhs) + constant_value(*n.rhs);
      case Op::Sub: return constant_value(*n.lhs) - constant_value(*n.rhs);
      case Op::Mul: return constant_value(*n.lhs) * constant_value(*n.rhs);
      case Op::Div: return constant_value(*n.lhs) / constant_value(*n.rhs);
      case Op::Pow: return std::pow(constant_value(*n.lhs), n.value);
      case Op::Coordinate: break;
    }
    return 0.0;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expression();
      expect(')');
      return e;
    }
    if ((c >= '0' && c <= '9') || c == '.') return number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return make_node(Op::Constant, v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
      ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);

    static constexpr std::pair<std::string_view, Op> funcs[] = {
        {"sin", Op::Sin}, {"cos", Op::Cos}, {"exp", Op::Exp}, {"log", Op::Log}, {"sqrt", Op::Sqrt}};
    for (const auto& [name, op] : funcs) {
      if (id == name) {
        expect('(');
        NodePtr arg = expression();
        expect(')');
        return make_node(op, 0, 0, arg);
      }
    }

    if (id.size() >= 2 && id[0] == 'x') {
      int k = 0;
      auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), k);
      if (ec == std::errc() && ptr == id.data() + id.size()) {
        if (k < 1 || k > dim_) {
          throw ParseError("coordinate index x" + std::to_string(k) + " out of range 1.." + std::to_string(dim_),
                           start);
        }
        return make_node(Op::Coordinate, 0, k - 1);
      }
    }
    throw ParseError("unknown symbol '" + std::string(id) + "'", start);
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ evaluation

struct UnaryDerivs {
  double g, d1, d2;
};

// Value and first two derivatives of the unary node at u, or a domain error.
UnaryDerivs unary_derivs(const Node& n, double u) {
  switch (n.op) {
    case Op::Neg: return {-u, -1.0, 0.0};
    case Op::Sin: return {std::sin(u), std::cos(u), -std::sin(u)};
    case Op::Cos: return {std::cos(u), -std::sin(u), -std::cos(u)};
    case Op::Exp: {
      const double e = std::exp(u);
      return {e, e, e};
    }
    case Op::Log:
      if (!(u > 0.0)) throw DomainError("log of non-positive value", node_text(n));
      return {std::log(u), 1.0 / u, -1.0 / (u * u)};
    case Op::Sqrt: {
      if (!(u > 0.0)) throw DomainError("sqrt of non-positive value", node_text(n));
      const double s = std::sqrt(u);
      return {s, 0.5 / s, -0.25 / (s * u)};
    }
    case Op::Pow: {
      const double p = n.value;
      const bool integral = std::floor(p) == p;
      if (integral) {
        if (u == 0.0 && p < 0) throw DomainError("zero raised to a negative power", node_text(n));
        if (p == 0.0) return {1.0, 0.0, 0.0};
        if (p == 1.0) return {u, 1.0, 0.0};
        if (p == 2.0) return {u * u, 2.0 * u, 2.0};
        return {std::pow(u, p), p * std::pow(u, p - 1), p * (p - 1) * std::pow(u, p - 2)};
      }
      if (u < 0.0) throw DomainError("negative base with non-integer exponent", node_text(n));
      if (u == 0.0 && p < 2.0) throw DomainError("non-smooth power at zero", node_text(n));
      return {std::pow(u, p), p * std::pow(u, p - 1), p * (p - 1) * std::pow(u, p - 2)};
    }
    default: break;
  }
  return {0, 0, 0};
}

double eval_double(const Node& n, const Eigen::VectorXd& x) {
  switch (n.op) {
    case Op::Constant: return n.value;
    case Op::Coordinate: return x(n.index);
    case Op::Add: return eval_double(*n.lhs, x) + eval_double(*n.rhs, x);
    case Op::Sub: return eval_double(*n.lhs, x) - eval_double(*n.rhs, x);
    case Op::Mul: return eval_double(*n.lhs, x) * eval_double(*n.rhs, x);
    case Op::Div: {
      const double d = eval_double(*n.rhs, x);
      if (d == 0.0) throw DomainError("division by zero", node_text(n));
      return eval_double(*n.lhs, x) / d;
    }
    default: return unary_derivs(n, eval_double(*n.lhs, x)).g;
  }
}

Jet2 eval_jet(const Node& n, const Eigen::VectorXd& x) {
  const int dim = static_cast<int>(x.size());
  switch (n.op) {
    case Op::Constant: return Jet2::constant(n.value, dim);
    case Op::Coordinate: return Jet2::variable(x(n.index), n.index, dim);
    case Op::Add: return eval_jet(*n.lhs, x) + eval_jet(*n.rhs, x);
    case Op::Sub: return eval_jet(*n.lhs, x) - eval_jet(*n.rhs, x);
    case Op::Mul: return eval_jet(*n.lhs, x) * eval_jet(*n.rhs, x);
    case Op::Div: {
      Jet2 d = eval_jet(*n.rhs, x);
      if (d.value == 0.0) throw DomainError("division by zero", node_text(n));
      return eval_jet(*n.lhs, x) / d;
    }
    default: {
      Jet2 u = eval_jet(*n.lhs, x);
      const UnaryDerivs g = unary_derivs(n, u.value);
      return u.chain(g.g, g.d1, g.d2);
    }
  }
}

}  // namespace

Expression::Expression() : root_(make_node(Op::Constant, 0.0)), dim_(0) {}

Expression Expression::parse(std::string_view text, int dim) {
  if (dim < 1) throw ParseError("dimension must be positive", 0);
  return Expression(Parser(text, dim).parse(), dim);
}

Expression Expression::constant(double c, int dim) { return Expression(make_node(Op::Constant, c), dim); }

Expression Expression::coordinate(int index, int dim) {
  if (index < 0 || index >= dim) throw std::out_of_range("coordinate index out of range");
  return Expression(make_node(Op::Coordinate, 0.0, index), dim);
}

bool Expression::is_constant() const { return !has_coordinates(*root_); }

double Expression::eval(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("point dimension does not match expression");
  const double v = eval_double(*root_, x);
  if (!std::isfinite(v)) throw DomainError("non-finite value", node_text(*root_));
  return v;
}

Jet2 Expression::eval_jet2(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("point dimension does not match expression");
  Jet2 j = eval_jet(*root_, x);
  if (!std::isfinite(j.value) || !j.grad.allFinite() || !j.hess.allFinite())
    throw DomainError("non-finite derivative", node_text(*root_));
  j.hess = 0.5 * (j.hess + j.hess.transpose()).eval();
  return j;
}

std::string Expression::to_string() const { return node_text(*root_); }

}  // namespace rext::expr
