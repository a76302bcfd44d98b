#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ruled/corpus.hpp"
#include "ruled/curves.hpp"
#include "ruled/errors.hpp"

using namespace ruled;

namespace {

ExprCurve curve(const char* x, const char* y, const char* z, double a, double b) {
  return ExprCurve({expr::parse(x), expr::parse(y), expr::parse(z)}, a, b);
}

void expect_vec(const MVec3& a, const MVec3& b, double tol) {
  EXPECT_NEAR(a.x1(), b.x1(), tol);
  EXPECT_NEAR(a.x2(), b.x2(), tol);
  EXPECT_NEAR(a.x3(), b.x3(), tol);
}

}  // namespace

TEST(Curves, ArcLengthTable) {
  EXPECT_NEAR(arc_length_table(curve("u", "0", "0", 0, 2)).total, 2.0, 1e-12);
  EXPECT_NEAR(arc_length_table(curve("0", "cos(u)", "sin(u)", 0, 2 * std::numbers::pi)).total, 2 * std::numbers::pi,
              1e-8);
  EXPECT_NEAR(arc_length_table(curve("sinh(u)", "cosh(u)", "0", 0, 1)).total, 1.0, 1e-8);
}

TEST(Curves, ArcLengthTableMonotoneAndAccurate) {
  // Spacelike curve with speed sqrt(1 + 4u^2): s(u) = (u sqrt(1+4u^2) + asinh(2u)/2) / 2.
  const ArcLengthTable t = arc_length_table(curve("0", "u", "u*u", 0, 1));
  for (std::size_t i = 0; i < t.u.size(); ++i) {
    const double u = t.u[i];
    const double exact = 0.5 * (u * std::sqrt(1 + 4 * u * u) + 0.5 * std::asinh(2 * u));
    EXPECT_NEAR(t.s[i], exact, 1e-9);
    if (i > 0) EXPECT_GT(t.s[i], t.s[i - 1]);
  }
}

TEST(Curves, NullTangentRejected) {
  try {
    arc_length_table(curve("u", "u", "0", 0, 1));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NullTangent);
  }
}

TEST(Curves, UnitTangent) {
  expect_vec(unit_tangent(curve("u", "0", "0", 0, 1), 0.7), {1, 0, 0}, 1e-15);
  expect_vec(unit_tangent(curve("sinh(u)", "cosh(u)", "0", 0, 1), 0.0), {1, 0, 0}, 1e-15);
  expect_vec(unit_tangent(curve("0", "cos(u)", "sin(u)", 0, 1), 0.0), {0, 0, 1}, 1e-15);
}

TEST(Curves, ArcLengthMapInverse) {
  const ArcLengthMap m([](double u) { return 1.0 + u * u; }, 0.0, 2.0, 64);
  EXPECT_NEAR(m.total(), 2.0 + 8.0 / 3.0, 1e-12);
  for (int i = 0; i <= 20; ++i) {
    const double u = 0.1 * i;
    EXPECT_NEAR(m.s_of_u(u), u + u * u * u / 3.0, 1e-12);
    EXPECT_NEAR(m.u_of_s(m.s_of_u(u)), u, 1e-12);
  }
}

TEST(Curves, SampledCurveDerivatives) {
  std::vector<double> u;
  std::vector<MVec3> p;
  for (int i = 0; i <= 200; ++i) {
    u.push_back(0.01 * i);
    p.emplace_back(std::sinh(u.back()), std::cosh(u.back()), u.back());
  }
  const SampledCurve c(u, p);
  const double x = 1.234;
  expect_vec(c.position(x), {std::sinh(x), std::cosh(x), x}, 1e-9);
  expect_vec(c.derivative(x, 1), {std::cosh(x), std::sinh(x), 1}, 1e-7);
  expect_vec(c.derivative(x, 2), {std::sinh(x), std::cosh(x), 0}, 1e-5);
  EXPECT_TRUE(derivatives_consistent(c));
}

TEST(Curves, SimilarTangentDevelopablePair) {
  const CurvePtr a = corpus::hyperbolic_angle_curve(expr::parse("u"), 0.25, 2.25);
  const CurvePtr b = corpus::hyperbolic_angle_curve(expr::parse("u*u"), 0.5, 1.5);
  const SimilarCurveReport r = are_similar_curves(*a, *b);
  EXPECT_TRUE(r.is_similar);
  EXPECT_TRUE(r.monotone);
  ASSERT_FALSE(r.samples.empty());
  for (const auto& s : r.samples) {
    const double t = s.u_beta;
    EXPECT_NEAR(s.lambda, 2 * t, 1e-3);
    EXPECT_NEAR(s.u_alpha, t * t, 1e-3);
  }
}

TEST(Curves, IdenticalCurvesAreSimilarWithUnitLambda) {
  const CurvePtr a = corpus::hyperbolic_angle_curve(expr::parse("u*u"), 0.5, 1.5);
  const SimilarCurveReport r = are_similar_curves(*a, *a);
  EXPECT_TRUE(r.is_similar);
  for (const auto& s : r.samples) EXPECT_NEAR(s.lambda, 1.0, 1e-6);
}

TEST(Curves, DisjointTangentImagesAreNotSimilar) {
  const CurvePtr a = corpus::hyperbolic_angle_curve(expr::parse("u"), 0.25, 2.25);
  const ExprCurve b = curve("0", "cos(u)", "sin(u)", 0.5, 1.5);
  EXPECT_FALSE(are_similar_curves(*a, b).is_similar);
}
