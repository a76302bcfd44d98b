#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ruled::expr {

/// Expressions in the single variable `u`.
///
/// Grammar (whitespace is insignificant):
///
///     expression := term { ("+" | "-") term }
///     term       := power { ("*" | "/") power }
///     power      := unary [ "^" integer ]
///     unary      := "-" unary | primary
///     primary    := number | "u" | "(" expression ")"
///                 | func "(" expression ")"
///                 | "pow" "(" expression "," integer ")"
///     func       := "sin" | "cos" | "sinh" | "cosh" | "exp" | "sqrt"
///     integer    := [ "-" ] digits
///
/// Unary minus binds tighter than "^", so "-u^2" is (-u)^2.
enum class Op { Var, Lit, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Sinh, Cosh, Exp, Sqrt };

class Node;
using NodePtr = std::shared_ptr<const Node>;

class Node {
 public:
  Node(Op op, double literal, int exponent, NodePtr lhs, NodePtr rhs)
      : op(op), literal(literal), exponent(exponent), lhs(std::move(lhs)), rhs(std::move(rhs)) {}

  const Op op;
  const double literal;  ///< Lit only
  const int exponent;    ///< Pow only
  const NodePtr lhs;     ///< operand of unary nodes, left operand of binary ones
  const NodePtr rhs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Immutable expression handle. Copies share the tree.
class Expr {
 public:
  Expr() : Expr(literal(0.0)) {}
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  static Expr variable();
  static Expr literal(double value);

  const Node& root() const { return *root_; }
  const NodePtr& node() const { return root_; }

  /// Throws GeometryError(DomainError) on division by zero, square root of
  /// a negative value or a zero base with negative exponent.
  double eval(double u) const;

  /// Structural derivative with constant folding.
  Expr differentiate() const;

  /// Fully parenthesised text that parses back to an equivalent tree.
  std::string to_string() const;

  bool is_constant() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

 private:
  NodePtr root_;
};

Expr parse(std::string_view text);

Expr pow(const Expr& base, int exponent);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr sinh(const Expr& e);
Expr cosh(const Expr& e);
Expr exp(const Expr& e);
Expr sqrt(const Expr& e);

}  // namespace ruled::expr
