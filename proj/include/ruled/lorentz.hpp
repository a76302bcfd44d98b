#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

#include "ruled/errors.hpp"

namespace ruled {

/// Vector in Minkowski 3-space, metric signature (-,+,+).
/// Components are checked for finiteness on construction.
class MVec3 {
 public:
  constexpr MVec3() = default;
  MVec3(double x1, double x2, double x3) : v_{x1, x2, x3} {
    if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3)) {
      throw GeometryError(ErrorCode::InvalidArgument, "non-finite vector component");
    }
  }

  double x1() const { return v_[0]; }
  double x2() const { return v_[1]; }
  double x3() const { return v_[2]; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

  MVec3 operator+(const MVec3& o) const { return {v_[0] + o.v_[0], v_[1] + o.v_[1], v_[2] + o.v_[2]}; }
  MVec3 operator-(const MVec3& o) const { return {v_[0] - o.v_[0], v_[1] - o.v_[1], v_[2] - o.v_[2]}; }
  MVec3 operator-() const { return {-v_[0], -v_[1], -v_[2]}; }
  MVec3 operator*(double s) const { return {v_[0] * s, v_[1] * s, v_[2] * s}; }
  MVec3 operator/(double s) const { return {v_[0] / s, v_[1] / s, v_[2] / s}; }
  MVec3& operator+=(const MVec3& o) { return *this = *this + o; }
  MVec3& operator-=(const MVec3& o) { return *this = *this - o; }

  /// Norm of the component triple in the Euclidean sense; used for
  /// tolerances and deviation reports, never as a geometric quantity.
  double euclidean_norm() const { return std::sqrt(v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]); }
  double euclidean_norm_squared() const { return v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]; }

 private:
  std::array<double, 3> v_{0.0, 0.0, 0.0};
};

inline MVec3 operator*(double s, const MVec3& v) { return v * s; }

std::ostream& operator<<(std::ostream& os, const MVec3& v);

enum class CausalCharacter { Spacelike, Timelike, Null };

enum class PseudoSphere { OnS12, OnH02, Neither };

std::string_view to_string(CausalCharacter c);
std::string_view to_string(PseudoSphere p);

/// Lorentz metric -x1*y1 + x2*y2 + x3*y3.
inline double inner(const MVec3& x, const MVec3& y) {
  return -x.x1() * y.x1() + x.x2() * y.x2() + x.x3() * y.x3();
}

/// Vector product with the component pattern
/// (x2y3 - x3y2, x1y3 - x3y1, x2y1 - x1y2).
/// Equals the negative of the product defined by <x^y, z> = det(x, y, z).
inline MVec3 lorentz_cross(const MVec3& x, const MVec3& y) {
  return {x.x2() * y.x3() - x.x3() * y.x2(), x.x1() * y.x3() - x.x3() * y.x1(),
          x.x2() * y.x1() - x.x1() * y.x2()};
}

/// Mixed product |a, b, c| := <a, b ^ c>. Only the sign of a nonzero value
/// depends on this convention.
inline double triple(const MVec3& a, const MVec3& b, const MVec3& c) { return inner(a, lorentz_cross(b, c)); }

/// Default relative null band.
inline constexpr double kDefaultTolNull = 1e-9;

/// Null when |<v,v>| <= tol_null * (1 + |v|^2) and v != 0. The zero vector
/// is spacelike.
CausalCharacter causal_character(const MVec3& v, double tol_null = kDefaultTolNull);

/// +1 for spacelike, -1 for timelike; throws NullVector for null input.
int causal_sign(const MVec3& v, double tol_null = kDefaultTolNull);

/// v / sqrt(|<v,v>|). Throws NullVector for null or zero input.
MVec3 normalize(const MVec3& v, double tol_null = kDefaultTolNull);

/// sqrt(|<v,v>|).
inline double lorentz_norm(const MVec3& v) { return std::sqrt(std::abs(inner(v, v))); }

PseudoSphere pseudo_sphere_membership(const MVec3& v, double r, double tol);

}  // namespace ruled
