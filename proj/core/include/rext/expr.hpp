#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "rext/jet.hpp"

namespace rext::expr {

/// Malformed expression text. `position()` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation left the domain of a node (division by zero, log of a
/// non-positive value, ...). `node()` is the printed offending subtree.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& what, std::string node)
      : std::runtime_error(what + " in '" + node + "'"), node_(std::move(node)) {}
  const std::string& node() const { return node_; }

 private:
  std::string node_;
};

enum class Op {
  Constant,
  Coordinate,
  Neg,
  Sin,
  Cos,
  Exp,
  Log,
  Sqrt,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Constant;
  double value = 0.0;  // Constant: the value. Pow: the exponent.
  int index = 0;       // Coordinate: 0-based coordinate index.
  NodePtr lhs;
  NodePtr rhs;
};

/// Immutable scalar expression in the chart coordinates x1..xn.
///
/// Grammar (whitespace is ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?        exponent must be constant
///   primary := number | 'x'<k> | func '(' expr ')' | '(' expr ')'
///   func    := sin | cos | exp | log | sqrt
///
/// Copies share the tree; evaluation is const and thread-safe.
class Expression {
 public:
  Expression();

  static Expression parse(std::string_view text, int dim);
  static Expression constant(double c, int dim);
  static Expression coordinate(int index, int dim);

  int dim() const { return dim_; }
  const Node& root() const { return *root_; }

  /// True when the tree has no coordinate leaves.
  bool is_constant() const;

  double eval(const Eigen::VectorXd& x) const;
  Jet2 eval_jet2(const Eigen::VectorXd& x) const;

  /// Fully parenthesised text that parses back to an expression printing
  /// identically.
  std::string to_string() const;

 private:
  Expression(NodePtr root, int dim) : root_(std::move(root)), dim_(dim) {}

  NodePtr root_;
  int dim_ = 0;
};

}  // namespace rext::expr
