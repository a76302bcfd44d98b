#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruled/reconstruct.hpp"
#include "ruled/surfaces.hpp"

namespace ruled::checks {

/// One named invariant evaluated on one subject; passes when value <= tol.
struct Check {
  std::string name;
  std::string subject;
  double value = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string detail;
};

Check make_check(std::string name, std::string subject, double value, double tol, std::string detail = {});

struct Tolerances {
  double frame = 1e-6;        ///< Frenet residuals and product identities
  double orthonormal = 1e-8;  ///< Gram matrix and pseudo-sphere membership
  double sphere = 1e-5;       ///< spherical-image arc lengths
  double striction = 1e-8;    ///< <dq, dc>
  double delta = 1e-6;        ///< developability and theta/delta agreement
};

/// Arc length of a sampled curve from Lorentzian chord lengths, Richardson
/// extrapolated between the full and the every-other-point polygon.
double polygon_arc_length(const std::vector<MVec3>& points);

/// Max |<x,y> - diag(eps_q, eps_h, eps_a)| over the six pairings.
double gram_deviation(const FrameField& F);

Check frame_orthonormality(const FrameField& F, const std::string& subject, double tol);
Check frame_identities(const FrameField& F, const std::string& subject, double tol);
Check frame_derivatives(const FrameField& F, const std::string& subject, double tol);
/// q on S1^2 (eps_q = +1) or H0^2 (eps_q = -1).
Check pseudo_sphere(const FrameField& F, const std::string& subject, double tol);
/// |integral of k1 ds - arc length of q|.
Check spherical_image_q(const FrameField& F, const std::string& subject, double tol);
/// |integral of |k2| ds - arc length of a|.
Check spherical_image_a(const FrameField& F, const std::string& subject, double tol);
/// max |<dq, dc>| on the sample grid.
Check striction_orthogonality(const RuledSurfaceSpec& S, const std::string& subject, double tol,
                              const SurfaceOptions& opts = {});
/// Direction of surface_normal(u, v) against sign * a(u), both scaled to
/// Euclidean unit length, at the middle ruling; tolerance 10 / v.
Check limit_normal(const RuledSurfaceSpec& S, const std::string& subject, int sign, double v,
                   const SurfaceOptions& opts = {});
/// Expected sign of the limit normal: -eps_q a on timelike surfaces, +a on spacelike ones.
int limit_normal_sign(const FrameField& F);
/// T = +/-q verdict agrees with max|delta| <= tol, and d(theta) agrees with delta.
Check developability_equivalence(const RuledSurfaceSpec& S, const std::string& subject, double tol,
                                 const SurfaceOptions& opts = {}, int n = 0);
Check ode3(const FrameField& F, const ScalarFunction& f, const std::string& subject, double tol);

/// Frame checks plus, when S is given, the surface checks.
std::vector<Check> frame_suite(const FrameField& F, const std::string& subject, const Tolerances& tol);
std::vector<Check> surface_suite(const RuledSurfaceSpec& S, const FrameField& F, const Tolerances& tol,
                                 const SurfaceOptions& opts = {});

/// Swaps h and a at every sample (test hook for the verifier).
void corrupt_frame(FrameField& F);

}  // namespace ruled::checks
