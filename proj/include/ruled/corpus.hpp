#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruled/expr.hpp"
#include "ruled/surface_file.hpp"
#include "ruled/surfaces.hpp"

namespace ruled::corpus {

/// An analytic surface with its symbolic invariants.
struct Entry {
  SurfaceDefinition definition;
  SurfaceType type = SurfaceType::NPlus;
  bool timelike_surface = true;
  std::optional<double> k1;  ///< constant value when known
  std::optional<double> k2;
  bool developable = false;
  std::optional<double> delta;  ///< constant distribution parameter when known
  /// Sign s with surface_normal(u, v) -> s a(u) as v grows; absent for cylinders.
  std::optional<int> limit_normal_sign;
};

SurfaceDefinition analytic(const std::string& name, const std::array<std::string, 3>& base,
                           const std::array<std::string, 3>& ruling, double u_min, double u_max, int samples = 512);

/// H1: k = (u,0,0), q = (0, cos u, sin u) on [0, 2].
Entry helicoid();
/// k = (0,0,u), q = (cosh u, sinh u, 0) on [0, 1].
Entry nminus_conoid();
/// k = (0,0,u), q = (sinh u, cosh u, 0) on [0, 1].
Entry ntimes_conoid();
/// H1 with base (u, cos u, sin u); the striction curve is the axis again.
Entry offset_helicoid();
/// H1 with base shifted along the axis.
Entry shifted_helicoid();
Entry tilted_nplus(double psi = 0.5);
Entry tilted_nminus(double psi = 0.5);
Entry tilted_ntimes(double psi = 0.5);
/// Tangent developables.
Entry hyperbola_developable();
Entry helix_developable();
Entry timelike_helix_developable();
/// Constant-ruling surfaces.
Entry cylinder();
Entry parabolic_cylinder();

/// The ten surfaces of the developability corpus (three developable).
std::vector<Entry> developability_corpus();
/// Every analytic surface above.
std::vector<Entry> all();

/// Curve t -> integral from t0 of (cosh w, sinh w, 0) with w = angle(t):
/// a unit-speed timelike curve whose tangent has hyperbolic angle w. Position
/// by composite five-point Gauss-Legendre.
CurvePtr hyperbolic_angle_curve(const expr::Expr& angle, double t0, double t1, int samples = 512);

/// Tangent developable of hyperbolic_angle_curve: base c, ruling c'.
RuledSurfaceSpec angle_tangent_developable(const std::string& name, const expr::Expr& angle, double t0, double t1,
                                           int samples = 512);

}  // namespace ruled::corpus
