#include "ruled/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "ruled/errors.hpp"

namespace ruled::expr {

namespace {

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double literal = 0.0, int exponent = 0) {
  return std::make_shared<const Node>(op, literal, exponent, std::move(lhs), std::move(rhs));
}

NodePtr make_literal(double v) { return make(Op::Lit, nullptr, nullptr, v); }

bool is_lit(const NodePtr& n, double v) { return n->op == Op::Lit && n->literal == v; }
bool is_lit(const NodePtr& n) { return n->op == Op::Lit; }

// Folds only when the result is finite; anything that would raise a domain
// error is left for eval to report.
NodePtr fold_or(double value, NodePtr fallback) {
  return std::isfinite(value) ? make_literal(value) : std::move(fallback);
}

NodePtr add(const NodePtr& a, const NodePtr& b) {
  if (is_lit(a) && is_lit(b)) return fold_or(a->literal + b->literal, make(Op::Add, a, b));
  if (is_lit(a, 0.0)) return b;
  if (is_lit(b, 0.0)) return a;
  return make(Op::Add, a, b);
}

NodePtr neg(const NodePtr& a) {
  if (is_lit(a)) return make_literal(-a->literal);
  if (a->op == Op::Neg) return a->lhs;
  return make(Op::Neg, a);
}

NodePtr sub(const NodePtr& a, const NodePtr& b) {
  if (is_lit(a) && is_lit(b)) return fold_or(a->literal - b->literal, make(Op::Sub, a, b));
  if (is_lit(b, 0.0)) return a;
  if (is_lit(a, 0.0)) return neg(b);
  return make(Op::Sub, a, b);
}

NodePtr mul(const NodePtr& a, const NodePtr& b) {
  if (is_lit(a) && is_lit(b)) return fold_or(a->literal * b->literal, make(Op::Mul, a, b));
  if (is_lit(a, 0.0) || is_lit(b, 0.0)) return make_literal(0.0);
  if (is_lit(a, 1.0)) return b;
  if (is_lit(b, 1.0)) return a;
  return make(Op::Mul, a, b);
}

NodePtr div(const NodePtr& a, const NodePtr& b) {
  if (is_lit(a) && is_lit(b) && b->literal != 0.0) return fold_or(a->literal / b->literal, make(Op::Div, a, b));
  if (is_lit(b, 1.0)) return a;
  return make(Op::Div, a, b);
}

NodePtr power(const NodePtr& a, int n) {
  if (n == 0) return make_literal(1.0);
  if (n == 1) return a;
  if (is_lit(a) && !(a->literal == 0.0 && n < 0)) return fold_or(std::pow(a->literal, n), make(Op::Pow, a, nullptr, 0.0, n));
  return make(Op::Pow, a, nullptr, 0.0, n);
}

NodePtr func(Op op, const NodePtr& a) {
  if (is_lit(a)) {
    const double x = a->literal;
    switch (op) {
      case Op::Sin: return make_literal(std::sin(x));
      case Op::Cos: return make_literal(std::cos(x));
      case Op::Sinh: return fold_or(std::sinh(x), make(op, a));
      case Op::Cosh: return fold_or(std::cosh(x), make(op, a));
      case Op::Exp: return fold_or(std::exp(x), make(op, a));
      case Op::Sqrt:
        if (x >= 0.0) return make_literal(std::sqrt(x));
        break;
      default: break;
    }
  }
  return make(op, a);
}

double eval_node(const Node& n, double u) {
  switch (n.op) {
    case Op::Var: return u;
    case Op::Lit: return n.literal;
    case Op::Add: return eval_node(*n.lhs, u) + eval_node(*n.rhs, u);
    case Op::Sub: return eval_node(*n.lhs, u) - eval_node(*n.rhs, u);
    case Op::Mul: return eval_node(*n.lhs, u) * eval_node(*n.rhs, u);
    case Op::Div: {
      const double den = eval_node(*n.rhs, u);
      if (den == 0.0) throw GeometryError(ErrorCode::DomainError, "division by zero");
      return eval_node(*n.lhs, u) / den;
    }
    case Op::Neg: return -eval_node(*n.lhs, u);
    case Op::Pow: {
      const double base = eval_node(*n.lhs, u);
      if (base == 0.0 && n.exponent < 0) throw GeometryError(ErrorCode::DomainError, "zero raised to a negative power");
      return std::pow(base, n.exponent);
    }
    case Op::Sin: return std::sin(eval_node(*n.lhs, u));
    case Op::Cos: return std::cos(eval_node(*n.lhs, u));
    case Op::Sinh: return std::sinh(eval_node(*n.lhs, u));
    case Op::Cosh: return std::cosh(eval_node(*n.lhs, u));
    case Op::Exp: return std::exp(eval_node(*n.lhs, u));
    case Op::Sqrt: {
      const double x = eval_node(*n.lhs, u);
      if (x < 0.0) throw GeometryError(ErrorCode::DomainError, "square root of a negative value");
      return std::sqrt(x);
    }
  }
  throw GeometryError(ErrorCode::DomainError, "corrupt expression node");
}

NodePtr derive(const NodePtr& p) {
  const Node& n = *p;
  switch (n.op) {
    case Op::Var: return make_literal(1.0);
    case Op::Lit: return make_literal(0.0);
    case Op::Add: return add(derive(n.lhs), derive(n.rhs));
    case Op::Sub: return sub(derive(n.lhs), derive(n.rhs));
    case Op::Mul: return add(mul(derive(n.lhs), n.rhs), mul(n.lhs, derive(n.rhs)));
    case Op::Div:
      // (f/g)' = f'/g - f g' / g^2
      return sub(div(derive(n.lhs), n.rhs), div(mul(n.lhs, derive(n.rhs)), power(n.rhs, 2)));
    case Op::Neg: return neg(derive(n.lhs));
    case Op::Pow:
      return mul(mul(make_literal(n.exponent), power(n.lhs, n.exponent - 1)), derive(n.lhs));
    case Op::Sin: return mul(func(Op::Cos, n.lhs), derive(n.lhs));
    case Op::Cos: return neg(mul(func(Op::Sin, n.lhs), derive(n.lhs)));
    case Op::Sinh: return mul(func(Op::Cosh, n.lhs), derive(n.lhs));
    case Op::Cosh: return mul(func(Op::Sinh, n.lhs), derive(n.lhs));
    case Op::Exp: return mul(p, derive(n.lhs));
    case Op::Sqrt: return div(derive(n.lhs), mul(make_literal(2.0), p));
  }
  throw GeometryError(ErrorCode::DomainError, "corrupt expression node");
}

std::string format_literal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(v));
  std::string s(buf);
  return v < 0.0 || std::signbit(v) ? "(-" + s + ")" : s;
}

const char* func_name(Op op) {
  switch (op) {
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Sinh: return "sinh";
    case Op::Cosh: return "cosh";
    case Op::Exp: return "exp";
    case Op::Sqrt: return "sqrt";
    default: return "?";
  }
}

void print(const Node& n, std::string& out) {
  auto binary = [&](const char* sym) {
    out += '(';
    print(*n.lhs, out);
    out += sym;
    print(*n.rhs, out);
    out += ')';
  };
  switch (n.op) {
    case Op::Var: out += 'u'; return;
    case Op::Lit: out += format_literal(n.literal); return;
    case Op::Add: binary(" + "); return;
    case Op::Sub: binary(" - "); return;
    case Op::Mul: binary(" * "); return;
    case Op::Div: binary(" / "); return;
    case Op::Neg:
      out += "(-";
      print(*n.lhs, out);
      out += ')';
      return;
    case Op::Pow:
      out += "pow(";
      print(*n.lhs, out);
      out += ", " + std::to_string(n.exponent) + ")";
      return;
    default:
      out += func_name(n.op);
      out += '(';
      print(*n.lhs, out);
      out += ')';
      return;
  }
}

bool depends_on_variable(const Node& n) {
  if (n.op == Op::Var) return true;
  if (n.lhs && depends_on_variable(*n.lhs)) return true;
  if (n.rhs && depends_on_variable(*n.rhs)) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    std::string msg = what + " at offset " + std::to_string(pos_) + "; expected one of:";
    for (const auto& e : expected) msg += " '" + e + "'";
    throw ParseError(pos_, std::move(expected), msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, std::vector<std::string> expected) {
    if (!accept(c)) fail(std::move(expected), std::string("missing '") + c + "'");
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = power_level();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::Mul, lhs, power_level());
      } else if (accept('/')) {
        lhs = make(Op::Div, lhs, power_level());
      } else {
        return lhs;
      }
    }
  }

  NodePtr power_level() {
    NodePtr base = unary();
    if (accept('^')) return make(Op::Pow, base, nullptr, 0.0, integer());
    return base;
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, unary());
    return primary();
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    int value = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) {
      pos_ = start;
      fail({"integer"}, "exponent must be an integer literal");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  NodePtr number() {
    const char* first = text_.data() + pos_;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) fail({"number"}, "malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return make_literal(value);
  }

  NodePtr primary() {
    static const std::vector<std::string> kPrimary = {"number", "u", "(", "-", "sin", "cos", "sinh",
                                                      "cosh",   "exp", "sqrt", "pow"};
    skip_ws();
    if (pos_ >= text_.size()) fail(kPrimary, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      expect(')', {"+", "-", "*", "/", "^", ")"});
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view id = text_.substr(start, pos_ - start);
      if (id == "u") return make(Op::Var);
      Op op;
      if (id == "sin") op = Op::Sin;
      else if (id == "cos") op = Op::Cos;
      else if (id == "sinh") op = Op::Sinh;
      else if (id == "cosh") op = Op::Cosh;
      else if (id == "exp") op = Op::Exp;
      else if (id == "sqrt") op = Op::Sqrt;
      else if (id == "pow") op = Op::Pow;
      else {
        pos_ = start;
        fail({"u", "sin", "cos", "sinh", "cosh", "exp", "sqrt", "pow"}, "unknown identifier '" + std::string(id) + "'");
      }
      expect('(', {"("});
      NodePtr arg = expression();
      if (op == Op::Pow) {
        expect(',', {",", "+", "-", "*", "/", "^"});
        const int n = integer();
        expect(')', {")"});
        return make(Op::Pow, arg, nullptr, 0.0, n);
      }
      expect(')', {"+", "-", "*", "/", "^", ")"});
      return make(op, arg);
    }
    fail(kPrimary, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : std::runtime_error("ParseError: " + message), offset_(offset), expected_(std::move(expected)) {}

Expr Expr::variable() { return Expr(make(Op::Var)); }
Expr Expr::literal(double value) { return Expr(make_literal(value)); }

double Expr::eval(double u) const { return eval_node(*root_, u); }

Expr Expr::differentiate() const { return Expr(derive(root_)); }

std::string Expr::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

bool Expr::is_constant() const { return !depends_on_variable(*root_); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(add(a.node(), b.node())); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(sub(a.node(), b.node())); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(mul(a.node(), b.node())); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(div(a.node(), b.node())); }
Expr operator-(const Expr& a) { return Expr(neg(a.node())); }

Expr pow(const Expr& base, int exponent) { return Expr(power(base.node(), exponent)); }
Expr sin(const Expr& e) { return Expr(func(Op::Sin, e.node())); }
Expr cos(const Expr& e) { return Expr(func(Op::Cos, e.node())); }
Expr sinh(const Expr& e) { return Expr(func(Op::Sinh, e.node())); }
Expr cosh(const Expr& e) { return Expr(func(Op::Cosh, e.node())); }
Expr exp(const Expr& e) { return Expr(func(Op::Exp, e.node())); }
Expr sqrt(const Expr& e) { return Expr(func(Op::Sqrt, e.node())); }

Expr parse(std::string_view text) { return Expr(Parser(text).parse_all()); }

}  // namespace ruled::expr
