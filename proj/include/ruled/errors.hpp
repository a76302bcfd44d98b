#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ruled {

/// Failure categories raised by the geometric operations. The enumerator
/// names double as the identifiers printed by the command line front end.
enum class ErrorCode {
  NullVector,
  DomainError,
  NullTangent,
  DegenerateIndicatrix,
  SingularPoint,
  CylindricalRuling,
  NullSphericalImage,
  NullTransition,
  CharacterMismatch,
  KindMismatch,
  DegenerateK1,
  NotDevelopable,
  FrameDegeneration,
  DegenerateF,
  CharacterViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ruled
