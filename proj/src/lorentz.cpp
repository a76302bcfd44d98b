#include "ruled/lorentz.hpp"

#include <ostream>

namespace ruled {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullVector: return "NullVector";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NullTangent: return "NullTangent";
    case ErrorCode::DegenerateIndicatrix: return "DegenerateIndicatrix";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::CylindricalRuling: return "CylindricalRuling";
    case ErrorCode::NullSphericalImage: return "NullSphericalImage";
    case ErrorCode::NullTransition: return "NullTransition";
    case ErrorCode::CharacterMismatch: return "CharacterMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DegenerateK1: return "DegenerateK1";
    case ErrorCode::NotDevelopable: return "NotDevelopable";
    case ErrorCode::FrameDegeneration: return "FrameDegeneration";
    case ErrorCode::DegenerateF: return "DegenerateF";
    case ErrorCode::CharacterViolation: return "CharacterViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Null: return "null";
  }
  return "unknown";
}

std::string_view to_string(PseudoSphere p) {
  switch (p) {
    case PseudoSphere::OnS12: return "S1^2";
    case PseudoSphere::OnH02: return "H0^2";
    case PseudoSphere::Neither: return "neither";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, const MVec3& v) {
  return os << '(' << v.x1() << ", " << v.x2() << ", " << v.x3() << ')';
}

CausalCharacter causal_character(const MVec3& v, double tol_null) {
  const double e2 = v.euclidean_norm_squared();
  if (e2 == 0.0) return CausalCharacter::Spacelike;
  const double g = inner(v, v);
  const double band = tol_null * (1.0 + e2);
  if (std::abs(g) <= band) return CausalCharacter::Null;
  return g < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

int causal_sign(const MVec3& v, double tol_null) {
  switch (causal_character(v, tol_null)) {
    case CausalCharacter::Spacelike:
      if (v.euclidean_norm_squared() == 0.0) throw GeometryError(ErrorCode::NullVector, "zero vector has no sign");
      return 1;
    case CausalCharacter::Timelike: return -1;
    case CausalCharacter::Null: break;
  }
  throw GeometryError(ErrorCode::NullVector, "null vector has no causal sign");
}

MVec3 normalize(const MVec3& v, double tol_null) {
  if (v.euclidean_norm_squared() == 0.0) throw GeometryError(ErrorCode::NullVector, "cannot normalize the zero vector");
  if (causal_character(v, tol_null) == CausalCharacter::Null) {
    throw GeometryError(ErrorCode::NullVector, "cannot normalize a null vector");
  }
  return v / lorentz_norm(v);
}

PseudoSphere pseudo_sphere_membership(const MVec3& v, double r, double tol) {
  if (!(r > 0.0) || !(tol > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "radius and tolerance must be positive");
  const double g = inner(v, v);
  if (std::abs(g - r * r) <= tol) return PseudoSphere::OnS12;
  if (std::abs(g + r * r) <= tol) return PseudoSphere::OnH02;
  return PseudoSphere::Neither;
}

}  // namespace ruled
