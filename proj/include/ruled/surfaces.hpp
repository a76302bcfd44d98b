#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/curves.hpp"
#include "ruled/lorentz.hpp"

namespace ruled {

/// phi(u, v) = k(u) + v q(u). The ruling direction need not be unit; it is
/// normalised internally and must stay non-null.
struct RuledSurfaceSpec {
  std::string name;
  CurvePtr base;
  CurvePtr ruling;
  double u_min = 0.0;
  double u_max = 1.0;
  int samples = 512;
};

/// NMinus: h spacelike, q timelike. NPlus: h and q spacelike. NTimes: h
/// timelike (spacelike surface).
enum class SurfaceType { NMinus, NPlus, NTimes, Cylindrical };

std::string_view to_string(SurfaceType t);

/// Parameter in which a frame field is uniformly sampled.
enum class FrameGrid { ArcLength, TotalCurvature };

struct FrameSample {
  double u = 0.0;    ///< parameter of the defining surface (phi for reconstructed frames)
  double s = 0.0;    ///< arc length of the striction curve
  double phi = 0.0;  ///< running integral of k1 ds
  MVec3 c, q, h, a;
  double k1 = 0.0;
  double k2 = 0.0;
};

struct FrameField {
  std::vector<FrameSample> samples;
  int eps_q = 1;
  int eps_h = 1;
  SurfaceType type = SurfaceType::NPlus;
  bool timelike_surface = true;
  FrameGrid grid = FrameGrid::ArcLength;

  /// <a,a>: -eps_q on timelike surfaces, +1 on spacelike ones.
  int eps_a() const { return timelike_surface ? -eps_q : 1; }
  /// Uniform spacing in the grid parameter.
  double step() const;
  std::size_t size() const { return samples.size(); }
};

struct SurfaceOptions {
  double tol_null = kDefaultTolNull;
  /// k1 below this (and |dq| below it in Euclidean norm) counts as degenerate.
  double k1_floor = 1e-9;
};

/// Frame data at a single parameter, with the derivative chain evaluated
/// from exact u-derivatives of the defining curves.
struct LocalFrame {
  MVec3 c, dc;  ///< striction point and its u-derivative
  MVec3 dq;     ///< u-derivative of the unit ruling
  MVec3 q, h, a;
  double sigma = 0.0;  ///< ds/du along the striction curve
  double k1 = 0.0;
  double k2 = 0.0;
  int eps_q = 1;
  int eps_h = 1;
  int eps_c = 1;
};

LocalFrame local_frame(const RuledSurfaceSpec& S, double u, const SurfaceOptions& opts = {});

/// Unit normal of lorentz_cross(phi_u, phi_v); throws SingularPoint when the
/// product is zero or null.
MVec3 surface_normal(const RuledSurfaceSpec& S, double u, double v, double tol_null = kDefaultTolNull);

/// delta = |dk, q, dq| / <dq, dq> with the normalised ruling.
double distribution_parameter(const RuledSurfaceSpec& S, double u, const SurfaceOptions& opts = {});

bool is_torsal_ruling(const RuledSurfaceSpec& S, double u, double tol);

/// c(u) = k(u) - <dq, dk> / <dq, dq> q(u). The third derivative of the
/// returned curve is a central difference of the exact second derivative.
CurvePtr striction_curve(const RuledSurfaceSpec& S, const SurfaceOptions& opts = {});

/// Frame sampled uniformly in striction arc length.
FrameField frame_field(const RuledSurfaceSpec& S, int n, const SurfaceOptions& opts = {});

/// As frame_field, but splits the interval around subintervals where the
/// ruling is stationary (k1 below the floor) and frames each remaining piece.
std::vector<FrameField> frame_field_segments(const RuledSurfaceSpec& S, int n, const SurfaceOptions& opts = {});

struct FrenetResiduals {
  double dq = 0.0;  ///< max |dq/ds - rhs|
  double dh = 0.0;
  double da = 0.0;
  double identities = 0.0;  ///< max deviation in the three vector-product identities

  double max_derivative() const { return std::max({dq, dh, da}); }
  double max() const { return std::max(max_derivative(), identities); }
};

/// Compares fourth-order central differences of the frame with the Frenet
/// right-hand sides and checks the vector-product identities.
FrenetResiduals verify_frenet(const FrameField& F);

struct DevelopabilityReport {
  bool developable = false;
  double max_tangent_deviation = 0.0;  ///< max |T -/+ q| (ruling orientation is free)
  bool character_mismatch = false;
  std::vector<double> s;
  std::vector<double> delta;                 ///< distribution parameter at each sample
  std::optional<std::vector<double>> theta;  ///< absent on CharacterMismatch
  std::vector<double> d_profile;             ///< d(theta) when theta exists, otherwise delta
  double max_abs_delta = 0.0;
  double theta_delta_agreement = 0.0;  ///< max |d(theta) - delta|, 0 without theta
  std::vector<std::string> notes;
};

DevelopabilityReport developability(const RuledSurfaceSpec& S, double tol, const SurfaceOptions& opts = {},
                                    int n = 0);

SurfaceType classify(const RuledSurfaceSpec& S, const SurfaceOptions& opts = {});

/// True when the ruling direction is stationary over the whole interval.
bool is_cylindrical(const RuledSurfaceSpec& S, const SurfaceOptions& opts = {});

/// Causal kind of the surface at (u, v): true for a timelike surface
/// (spacelike normal). Works for cylinders, which have no Frenet frame.
bool surface_is_timelike(const RuledSurfaceSpec& S, double u, double v, double tol_null = kDefaultTolNull);

}  // namespace ruled
