#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/expr.hpp"
#include "ruled/lorentz.hpp"
#include "ruled/surfaces.hpp"

namespace ruled {

/// Real function of one variable with its derivative. Built from a DSL
/// expression (whose variable u stands for the argument), a constant, or a
/// pair of callables.
class ScalarFunction {
 public:
  ScalarFunction(double constant);  // NOLINT: implicit on purpose
  ScalarFunction(expr::Expr e);     // NOLINT
  ScalarFunction(std::function<double(double)> value, std::function<double(double)> derivative,
                 std::string description = "function");

  double operator()(double x) const { return value_(x); }
  double derivative(double x) const { return derivative_(x); }
  const std::optional<expr::Expr>& expression() const { return expr_; }
  const std::string& description() const { return description_; }

 private:
  std::function<double(double)> value_;
  std::function<double(double)> derivative_;
  std::optional<expr::Expr> expr_;
  std::string description_;
};

/// TimelikeMinus: timelike surface, q timelike (eps = -1). TimelikePlus:
/// timelike surface, q spacelike (eps = +1). Spacelike: h timelike.
enum class ProfileKind { TimelikeMinus, TimelikePlus, Spacelike };

std::string_view to_string(ProfileKind k);
std::optional<ProfileKind> parse_profile_kind(std::string_view text);
SurfaceType surface_type(ProfileKind k);

struct InitialFrame {
  MVec3 q, h, a;
};

/// TimelikeMinus: q=(1,0,0), h=(0,1,0), a=(0,0,1). TimelikePlus:
/// q=(0,1,0), h=(0,0,1), a=(1,0,0). Spacelike: q=(0,1,0), h=(1,0,0), a=(0,0,-1).
InitialFrame default_initial_frame(ProfileKind k);

/// Throws InvalidArgument unless the frame is orthonormal with the signs of
/// the kind and satisfies its vector-product identities to tol.
void validate_initial_frame(const InitialFrame& fr, ProfileKind k, double tol = 1e-10);

struct InvariantProfile {
  ScalarFunction f = 0.0;  ///< f(phi) = k2 / k1
  ProfileKind kind = ProfileKind::TimelikeMinus;
  double phi_min = 0.0;
  double phi_max = 1.0;
  ScalarFunction k1_of_s = 1.0;  ///< positive
  InitialFrame initial = default_initial_frame(ProfileKind::TimelikeMinus);
};

struct IntegrationResult {
  FrameField frame;
  /// Largest deviation of the Gram matrix of {q,h,a} from diag(eps) seen
  /// after an RK4 step and before re-projection.
  double max_drift = 0.0;
};

/// RK4 in phi on the frame system plus ds/dphi = 1/k1(s), with Lorentz
/// Gram-Schmidt (order q, h, a) after every step. The frame is sampled on the
/// uniform phi grid (FrameGrid::TotalCurvature); u = phi and c is unset.
/// Throws InvalidArgument for steps < 16, FrameDegeneration when a vector
/// becomes near-null during re-projection.
IntegrationResult integrate_frenet_detailed(const InvariantProfile& p, int steps);
FrameField integrate_frenet(const InvariantProfile& p, int steps);

/// Max residual of the third-order ruling equation and of the identity
/// a = (q'' + eps q) / f (timelike) or a = (q'' - q) / f (spacelike), with
/// finite differences in phi on interior samples. Throws DegenerateF when
/// |f| < 1e-6 somewhere, InvalidArgument for fewer than 9 samples or a frame
/// not sampled in phi.
double ode3_residual(const FrameField& F, const ScalarFunction& f);

/// Developable: T = q. Angle: T = cosh(theta) q + sinh(theta) a (timelike)
/// or cos(theta) q + sin(theta) a (spacelike), theta a function of s.
struct BuildMode {
  std::optional<ScalarFunction> theta;

  static BuildMode developable() { return {}; }
  static BuildMode angle(ScalarFunction theta) { return {std::move(theta)}; }
};

/// Striction curve c from dc/dphi = T / k1 (cubic panels, c(start) = 0),
/// surface c(u) + v q(u) with u = phi, both sampled. Throws
/// CharacterViolation when <T,T> misses eps_q by more than 1e-6.
RuledSurfaceSpec build_surface(const FrameField& F, const BuildMode& mode, std::string name = "reconstructed");

struct FamilyMember {
  FrameField frame;
  RuledSurfaceSpec surface;
};

/// One developable surface per k1, sharing f, kind, phi range and initial frame.
std::vector<FamilyMember> generate_similar_family(const ScalarFunction& f, ProfileKind kind,
                                                  const std::vector<ScalarFunction>& k1_list,
                                                  const InitialFrame& initial, double phi_min, double phi_max,
                                                  int steps);

}  // namespace ruled
