#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ruled/errors.hpp"
#include "ruled/expr.hpp"

using namespace ruled;
using expr::Op;

TEST(Expr, ParseTrees) {
  const expr::Expr a = expr::parse("cosh(u)");
  EXPECT_EQ(a.root().op, Op::Cosh);
  EXPECT_EQ(a.root().lhs->op, Op::Var);

  const expr::Expr b = expr::parse("u*u + 1");
  ASSERT_EQ(b.root().op, Op::Add);
  EXPECT_EQ(b.root().lhs->op, Op::Mul);
  EXPECT_EQ(b.root().lhs->lhs->op, Op::Var);
  EXPECT_EQ(b.root().lhs->rhs->op, Op::Var);
  EXPECT_EQ(b.root().rhs->op, Op::Lit);
  EXPECT_EQ(b.root().rhs->literal, 1.0);
}

TEST(Expr, ParseErrorOffset) {
  try {
    expr::parse("cos(u");
    FAIL() << "expected ParseError";
  } catch (const expr::ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(expr::parse(""), expr::ParseError);
  EXPECT_THROW(expr::parse("u +* 2"), expr::ParseError);
  EXPECT_THROW(expr::parse("tan(u)"), expr::ParseError);
  EXPECT_THROW(expr::parse("x"), expr::ParseError);
}

TEST(Expr, Eval) {
  EXPECT_EQ(expr::parse("sinh(u)").eval(0.0), 0.0);
  EXPECT_EQ(expr::parse("cosh(u)").eval(0.0), 1.0);
  EXPECT_NEAR(expr::parse("2^3 - -u").eval(1.5), 9.5, 1e-15);
  EXPECT_NEAR(expr::parse("-u^2").eval(3.0), 9.0, 1e-15);  // unary minus binds tighter than ^
  EXPECT_NEAR(expr::parse("-(u^2)").eval(3.0), -9.0, 1e-15);
  EXPECT_NEAR(expr::parse("exp(u)/sqrt(u)").eval(4.0), std::exp(4.0) / 2.0, 1e-12);
  try {
    expr::parse("1/u").eval(0.0);
    FAIL() << "expected DomainError";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(Expr, Derivatives) {
  const expr::Expr d = expr::parse("sinh(u)").differentiate();
  for (double u : {-1.0, 0.0, 0.4, 2.0}) EXPECT_NEAR(d.eval(u), std::cosh(u), 1e-15);
  const expr::Expr sq = expr::parse("u*u").differentiate();
  for (int i = 0; i < 20; ++i) {
    const double u = -2.0 + 0.21 * i;
    EXPECT_NEAR(sq.eval(u), 2.0 * u, 1e-12);
  }
  EXPECT_EQ(expr::parse("cos(u)").differentiate().eval(0.0), 0.0);
}

namespace {

/// Random well-defined expression over u in [0.5, 1.5].
std::string random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 11);
  std::uniform_real_distribution<double> lit(0.5, 2.0);
  const auto sub = [&] { return random_expr(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: return "u";
    case 1: return std::to_string(lit(rng));
    case 2: return "(" + sub() + " + " + sub() + ")";
    case 3: return "(" + sub() + " - " + sub() + ")";
    case 4: return "(" + sub() + " * " + sub() + ")";
    case 5: return "(" + sub() + ") / (2 + sin(" + sub() + "))";
    case 6: return "sin(" + sub() + ")";
    case 7: return "cos(" + sub() + ")";
    case 8: return "sinh(0.5*" + sub() + ")";
    case 9: return "cosh(0.5*" + sub() + ")";
    case 10: return "sqrt(1 + (" + sub() + ")^2)";
    default: return "(" + sub() + ")^" + std::to_string(1 + static_cast<int>(rng() % 3));
  }
}

}  // namespace

TEST(Expr, RandomDerivativesMatchFiniteDifferences) {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> at(0.5, 1.5);
  int checked = 0;
  while (checked < 200) {
    const std::string text = random_expr(rng, 3);
    const expr::Expr e = expr::parse(text);
    const expr::Expr d = e.differentiate();
    const double u = at(rng);
    const double h = 1e-4;
    const double fd = (-e.eval(u + 2 * h) + 8 * e.eval(u + h) - 8 * e.eval(u - h) + e.eval(u - 2 * h)) / (12 * h);
    const double scale = 1.0 + std::abs(fd);
    if (!std::isfinite(fd) || scale > 1e6) continue;
    EXPECT_NEAR(d.eval(u), fd, 1e-6 * scale) << text << " at u = " << u;
    ++checked;
  }
}

TEST(Expr, PrintRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const expr::Expr e = expr::parse(random_expr(rng, 3));
    const expr::Expr back = expr::parse(e.to_string());
    EXPECT_EQ(back.to_string(), e.to_string());
    for (double u : {0.6, 1.0, 1.4}) EXPECT_NEAR(back.eval(u), e.eval(u), 1e-12 * (1.0 + std::abs(e.eval(u))));
  }
}
