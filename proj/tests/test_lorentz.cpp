#include <cmath>

#include <gtest/gtest.h>

#include "ruled/errors.hpp"
#include "ruled/lorentz.hpp"

using namespace ruled;

namespace {

void expect_vec(const MVec3& a, const MVec3& b, double tol) {
  EXPECT_NEAR(a.x1(), b.x1(), tol);
  EXPECT_NEAR(a.x2(), b.x2(), tol);
  EXPECT_NEAR(a.x3(), b.x3(), tol);
}

ErrorCode code_of(const MVec3& v) {
  try {
    normalize(v);
  } catch (const GeometryError& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Lorentz, Inner) {
  EXPECT_EQ(inner({1, 0, 0}, {1, 0, 0}), -1.0);
  EXPECT_EQ(inner({0, 1, 0}, {0, 1, 0}), 1.0);
  EXPECT_EQ(inner({5, 3, 4}, {5, 3, 4}), 0.0);
  EXPECT_EQ(inner({1, 2, 3}, {4, 5, 6}), -4.0 + 10.0 + 18.0);
}

TEST(Lorentz, Cross) {
  expect_vec(lorentz_cross({1, 0, 0}, {0, 1, 0}), {0, 0, -1}, 0.0);
  expect_vec(lorentz_cross({0.3, -2, 7}, {0.3, -2, 7}), {0, 0, 0}, 0.0);
  for (int i = 0; i < 50; ++i) {
    const double u = -3.0 + 0.13 * i;
    expect_vec(lorentz_cross({0, std::cos(u), std::sin(u)}, {0, -std::sin(u), std::cos(u)}), {1, 0, 0}, 1e-15);
  }
}

TEST(Lorentz, CrossIsOrthogonalAndAntisymmetric) {
  // Oracle: component pattern written out independently of the library.
  auto oracle = [](const MVec3& x, const MVec3& y) {
    return MVec3(x.x2() * y.x3() - x.x3() * y.x2(), x.x1() * y.x3() - x.x3() * y.x1(),
                 x.x2() * y.x1() - x.x1() * y.x2());
  };
  const MVec3 xs[] = {{1, 2, 3}, {-0.5, 4, 1}, {2, 0, -1}};
  for (const MVec3& x : xs) {
    for (const MVec3& y : xs) {
      const MVec3 c = lorentz_cross(x, y);
      expect_vec(c, oracle(x, y), 1e-14);
      EXPECT_NEAR(inner(c, x), 0.0, 1e-12);
      EXPECT_NEAR(inner(c, y), 0.0, 1e-12);
      expect_vec(c, -lorentz_cross(y, x), 1e-14);
    }
  }
}

TEST(Lorentz, CausalCharacter) {
  EXPECT_EQ(causal_character({2, 0, 0}), CausalCharacter::Timelike);
  EXPECT_EQ(causal_character({0, 3, 4}), CausalCharacter::Spacelike);
  EXPECT_EQ(causal_character({5, 3, 4}), CausalCharacter::Null);
  EXPECT_EQ(causal_character({0, 0, 0}), CausalCharacter::Spacelike);
  EXPECT_EQ(causal_sign({2, 0, 0}), -1);
  EXPECT_EQ(causal_sign({0, 3, 4}), 1);
}

TEST(Lorentz, Normalize) {
  expect_vec(normalize({2, 0, 0}), {1, 0, 0}, 1e-15);
  expect_vec(normalize({0, 3, 4}), {0, 0.6, 0.8}, 1e-15);
  EXPECT_EQ(code_of({1, 1, 0}), ErrorCode::NullVector);
  EXPECT_NEAR(std::abs(inner(normalize({3, 1, 2}), normalize({3, 1, 2}))), 1.0, 1e-14);
}

TEST(Lorentz, PseudoSphere) {
  EXPECT_EQ(pseudo_sphere_membership({0, 1, 0}, 1, 1e-8), PseudoSphere::OnS12);
  EXPECT_EQ(pseudo_sphere_membership({1, 0, 0}, 1, 1e-8), PseudoSphere::OnH02);
  EXPECT_EQ(pseudo_sphere_membership({1, 1, 0}, 1, 1e-8), PseudoSphere::Neither);
  EXPECT_EQ(pseudo_sphere_membership({std::cosh(0.7), std::sinh(0.7), 0}, 1, 1e-8), PseudoSphere::OnH02);
}
