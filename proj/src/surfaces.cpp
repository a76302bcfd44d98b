#include "ruled/surfaces.hpp"

#include <cmath>

#include "ruled/jet.hpp"
#include "ruled/numerics.hpp"

namespace ruled {

std::string_view to_string(SurfaceType t) {
  switch (t) {
    case SurfaceType::NMinus: return "NMinus";
    case SurfaceType::NPlus: return "NPlus";
    case SurfaceType::NTimes: return "NTimes";
    case SurfaceType::Cylindrical: return "Cylindrical";
  }
  return "Unknown";
}

double FrameField::step() const {
  if (samples.size() < 2) return 0.0;
  const double span = grid == FrameGrid::ArcLength ? samples.back().s - samples.front().s
                                                   : samples.back().phi - samples.front().phi;
  return span / static_cast<double>(samples.size() - 1);
}

namespace {

struct RulingJets {
  JetVec k;  // base, order 3
  JetVec q;  // unit ruling, order 3
  JetVec dq; // order 2
  int eps_q = 1;
};

RulingJets ruling_jets(const RuledSurfaceSpec& S, double u, double tol_null) {
  RulingJets r;
  r.k = to_jet(S.base->jet(u));
  const JetVec raw = to_jet(S.ruling->jet(u));
  const MVec3 q0 = raw.value();
  if (q0.euclidean_norm_squared() == 0.0 || causal_character(q0, tol_null) == CausalCharacter::Null) {
    throw GeometryError(ErrorCode::NullTransition, "ruling direction is null or zero at u = " + std::to_string(u));
  }
  const Jet qq = inner(raw, raw);
  r.eps_q = qq.value() > 0.0 ? 1 : -1;
  r.q = raw / sqrt(abs(qq));
  r.dq = r.q.derivative();
  return r;
}

void require_moving_ruling(const MVec3& dq, double u, const SurfaceOptions& opts) {
  if (dq.euclidean_norm() <= opts.k1_floor) {
    throw GeometryError(ErrorCode::CylindricalRuling, "ruling is stationary at u = " + std::to_string(u));
  }
  if (causal_character(dq, opts.tol_null) == CausalCharacter::Null) {
    throw GeometryError(ErrorCode::NullSphericalImage, "spherical image of the ruling is null at u = " + std::to_string(u));
  }
}

/// Striction curve as a jet of order 2.
JetVec striction_jet(const RulingJets& r) {
  const JetVec dk = r.k.derivative();
  const Jet mu = inner(r.dq, dk) / inner(r.dq, r.dq);
  return r.k - mu * r.q;
}

double wrap_step(double span, int n) { return span / static_cast<double>(n - 1); }

}  // namespace

LocalFrame local_frame(const RuledSurfaceSpec& S, double u, const SurfaceOptions& opts) {
  const RulingJets r = ruling_jets(S, u, opts.tol_null);
  require_moving_ruling(r.dq.value(), u, opts);

  LocalFrame f;
  f.eps_q = r.eps_q;
  const JetVec c = striction_jet(r);
  const JetVec dc = c.derivative();
  f.c = c.value();
  f.dc = dc.value();
  if (f.dc.euclidean_norm_squared() == 0.0 || causal_character(f.dc, opts.tol_null) == CausalCharacter::Null) {
    throw GeometryError(ErrorCode::NullTransition, "striction curve velocity is null at u = " + std::to_string(u));
  }
  f.eps_c = inner(f.dc, f.dc) > 0.0 ? 1 : -1;
  f.sigma = lorentz_norm(f.dc);

  const Jet dqdq = inner(r.dq, r.dq);
  f.eps_h = dqdq.value() > 0.0 ? 1 : -1;
  const JetVec h = r.dq / sqrt(abs(dqdq));
  const bool timelike_surface = f.eps_h > 0;
  const JetVec qxh = lorentz_cross(r.q, h);
  const JetVec a = timelike_surface ? qxh * static_cast<double>(f.eps_q) : -qxh;
  const MVec3 da_du = a.derivative().value();

  f.q = r.q.value();
  f.dq = r.dq.value();
  f.h = h.value();
  f.a = a.value();
  f.k1 = std::sqrt(std::abs(dqdq.value())) / f.sigma;
  const double sign = timelike_surface ? static_cast<double>(f.eps_q) : -1.0;
  f.k2 = sign * inner(da_du, f.h) / f.sigma;
  return f;
}

MVec3 surface_normal(const RuledSurfaceSpec& S, double u, double v, double tol_null) {
  const RulingJets r = ruling_jets(S, u, tol_null);
  const MVec3 phi_u = r.k.at(1) + r.dq.value() * v;
  const MVec3 n = lorentz_cross(phi_u, r.q.value());
  if (n.euclidean_norm_squared() == 0.0 || causal_character(n, tol_null) == CausalCharacter::Null) {
    throw GeometryError(ErrorCode::SingularPoint, "surface normal vanishes or is null");
  }
  return n / lorentz_norm(n);
}

bool surface_is_timelike(const RuledSurfaceSpec& S, double u, double v, double tol_null) {
  const MVec3 n = surface_normal(S, u, v, tol_null);
  return inner(n, n) > 0.0;
}

double distribution_parameter(const RuledSurfaceSpec& S, double u, const SurfaceOptions& opts) {
  const RulingJets r = ruling_jets(S, u, opts.tol_null);
  const MVec3 dq = r.dq.value();
  require_moving_ruling(dq, u, opts);
  return triple(r.k.at(1), r.q.value(), dq) / inner(dq, dq);
}

bool is_torsal_ruling(const RuledSurfaceSpec& S, double u, double tol) {
  const RulingJets r = ruling_jets(S, u, kDefaultTolNull);
  return std::abs(triple(r.k.at(1), r.q.value(), r.dq.value())) <= tol;
}

CurvePtr striction_curve(const RuledSurfaceSpec& S, const SurfaceOptions& opts) {
  const double span = S.u_max - S.u_min;
  for (int i = 0; i < S.samples; ++i) {
    const double u = S.u_min + wrap_step(span, S.samples) * i;
    require_moving_ruling(ruling_jets(S, u, opts.tol_null).dq.value(), u, opts);
  }
  const double fd_step = 1e-4 * span;
  auto jet_fn = [S, opts, fd_step](double u) {
    const JetVec c = striction_jet(ruling_jets(S, u, opts.tol_null));
    const MVec3 d2_plus = striction_jet(ruling_jets(S, u + fd_step, opts.tol_null)).at(2);
    const MVec3 d2_minus = striction_jet(ruling_jets(S, u - fd_step, opts.tol_null)).at(2);
    CurveJet j;
    j.d = {c.at(0), c.at(1), c.at(2), (d2_plus - d2_minus) / (2.0 * fd_step)};
    return j;
  };
  return std::make_shared<FunctionCurve>(jet_fn, S.u_min, S.u_max, S.samples);
}

FrameField frame_field(const RuledSurfaceSpec& S, int n, const SurfaceOptions& opts) {
  if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "frame field needs at least two samples");
  const double span = S.u_max - S.u_min;

  // Scan first so that character changes are reported before any resampling.
  const int scan = std::max(S.samples, n);
  LocalFrame first = local_frame(S, S.u_min, opts);
  for (int i = 1; i < scan; ++i) {
    const double u = S.u_min + wrap_step(span, scan) * i;
    const LocalFrame f = local_frame(S, u, opts);
    if (f.eps_q != first.eps_q || f.eps_h != first.eps_h || f.eps_c != first.eps_c) {
      throw GeometryError(ErrorCode::NullTransition,
                          "ruling, central normal or striction velocity changes causal character near u = " +
                              std::to_string(u));
    }
  }

  const ArcLengthMap map([&](double u) { return local_frame(S, u, opts).sigma; }, S.u_min, S.u_max,
                         2 * std::max(n - 1, S.samples));
  FrameField F;
  F.eps_q = first.eps_q;
  F.eps_h = first.eps_h;
  F.timelike_surface = first.eps_h > 0;
  F.type = !F.timelike_surface ? SurfaceType::NTimes : (F.eps_q < 0 ? SurfaceType::NMinus : SurfaceType::NPlus);
  F.grid = FrameGrid::ArcLength;
  F.samples.resize(static_cast<std::size_t>(n));
  const double h = map.total() / (n - 1);
  std::vector<double> k1(F.samples.size());
  for (std::size_t j = 0; j < F.samples.size(); ++j) {
    FrameSample& smp = F.samples[j];
    smp.s = h * static_cast<double>(j);
    smp.u = j + 1 == F.samples.size() ? S.u_max : map.u_of_s(smp.s);
    const LocalFrame f = local_frame(S, smp.u, opts);
    if (f.eps_q != F.eps_q || f.eps_h != F.eps_h || f.eps_c != first.eps_c) {
      throw GeometryError(ErrorCode::NullTransition, "causal character changes near u = " + std::to_string(smp.u));
    }
    smp.c = f.c;
    smp.q = f.q;
    smp.h = f.h;
    smp.a = f.a;
    smp.k1 = f.k1;
    smp.k2 = f.k2;
    k1[j] = f.k1;
  }
  const std::vector<double> phi = numerics::cumulative_integral(k1, h);
  for (std::size_t j = 0; j < F.samples.size(); ++j) F.samples[j].phi = phi[j];
  return F;
}

bool is_cylindrical(const RuledSurfaceSpec& S, const SurfaceOptions& opts) {
  const double span = S.u_max - S.u_min;
  for (int i = 0; i < S.samples; ++i) {
    const double u = S.u_min + wrap_step(span, S.samples) * i;
    if (ruling_jets(S, u, opts.tol_null).dq.value().euclidean_norm() > opts.k1_floor) return false;
  }
  return true;
}

std::vector<FrameField> frame_field_segments(const RuledSurfaceSpec& S, int n, const SurfaceOptions& opts) {
  const int scan = 2 * std::max(S.samples, n);
  const double span = S.u_max - S.u_min;
  const double du = wrap_step(span, scan);
  auto speed = [&](double u) { return ruling_jets(S, u, opts.tol_null).dq.value().euclidean_norm(); };
  std::vector<double> norm(static_cast<std::size_t>(scan));
  for (int i = 0; i < scan; ++i) norm[static_cast<std::size_t>(i)] = speed(S.u_min + du * i);
  const double peak = *std::max_element(norm.begin(), norm.end());
  if (peak <= opts.k1_floor) throw GeometryError(ErrorCode::CylindricalRuling, "ruling is stationary over the whole interval");

  // Stationary scan points, plus isolated zeros of |dq| that fall between scan points.
  std::vector<bool> degenerate(static_cast<std::size_t>(scan));
  bool any = false;
  for (int i = 0; i < scan; ++i) {
    const auto k = static_cast<std::size_t>(i);
    bool d = norm[k] <= opts.k1_floor;
    const bool local_min = (i == 0 || norm[k] <= norm[k - 1]) && (i + 1 == scan || norm[k] <= norm[k + 1]);
    if (!d && local_min && norm[k] <= 1e-2 * peak) {
      double lo = S.u_min + du * std::max(i - 1, 0);
      double hi = S.u_min + du * std::min(i + 1, scan - 1);
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      for (int it = 0; it < 80 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
        const double x1 = hi - g * (hi - lo);
        const double x2 = lo + g * (hi - lo);
        if (speed(x1) < speed(x2)) {
          hi = x2;
        } else {
          lo = x1;
        }
      }
      d = speed(0.5 * (lo + hi)) <= 1e-6 * peak;
    }
    degenerate[k] = d;
    any = any || d;
  }
  if (!any) return {frame_field(S, n, opts)};

  std::vector<FrameField> out;
  int i = 0;
  while (i < scan) {
    if (degenerate[static_cast<std::size_t>(i)]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < scan && !degenerate[static_cast<std::size_t>(j + 1)]) ++j;
    // Keep one scan step away from the stationary zone on each side.
    const int lo = i > 0 ? i + 1 : i;
    const int hi = j + 1 < scan ? j - 1 : j;
    if (hi - lo >= 3) {
      RuledSurfaceSpec piece = S;
      piece.u_min = S.u_min + du * lo;
      piece.u_max = S.u_min + du * hi;
      const double fraction = (piece.u_max - piece.u_min) / span;
      piece.samples = std::max(16, static_cast<int>(S.samples * fraction));
      out.push_back(frame_field(piece, std::max(5, static_cast<int>(n * fraction)), opts));
    }
    i = j + 1;
  }
  return out;
}

FrenetResiduals verify_frenet(const FrameField& F) {
  FrenetResiduals r;
  const std::size_t n = F.samples.size();
  const double eps = F.eps_q;
  auto identity_residual = [&](const FrameSample& p) {
    double worst;
    if (F.timelike_surface) {
      worst = std::max({(lorentz_cross(p.q, p.h) - p.a * eps).euclidean_norm(),
                        (lorentz_cross(p.h, p.a) + p.q * eps).euclidean_norm(),
                        (lorentz_cross(p.a, p.q) + p.h).euclidean_norm()});
    } else {
      worst = std::max({(lorentz_cross(p.q, p.h) + p.a).euclidean_norm(),
                        (lorentz_cross(p.h, p.a) + p.q).euclidean_norm(),
                        (lorentz_cross(p.a, p.q) - p.h).euclidean_norm()});
    }
    return worst;
  };
  for (const auto& p : F.samples) r.identities = std::max(r.identities, identity_residual(p));
  if (n < 5) return r;

  std::vector<MVec3> q(n), h(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = F.samples[i].q;
    h[i] = F.samples[i].h;
    a[i] = F.samples[i].a;
  }
  const double step = F.step();
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const FrameSample& p = F.samples[i];
    // Along a total-curvature grid d/ds = k1 d/dphi.
    const double chain = F.grid == FrameGrid::ArcLength ? 1.0 : p.k1;
    const MVec3 dq = numerics::central_first<MVec3>(q, i, step) * chain;
    const MVec3 dh = numerics::central_first<MVec3>(h, i, step) * chain;
    const MVec3 da = numerics::central_first<MVec3>(a, i, step) * chain;
    MVec3 rhs_h, rhs_a;
    if (F.timelike_surface) {
      rhs_h = p.q * (-eps * p.k1) + p.a * p.k2;
      rhs_a = p.h * (eps * p.k2);
    } else {
      rhs_h = p.q * p.k1 + p.a * p.k2;
      rhs_a = p.h * p.k2;
    }
    r.dq = std::max(r.dq, (dq - p.h * p.k1).euclidean_norm());
    r.dh = std::max(r.dh, (dh - rhs_h).euclidean_norm());
    r.da = std::max(r.da, (da - rhs_a).euclidean_norm());
  }
  return r;
}

DevelopabilityReport developability(const RuledSurfaceSpec& S, double tol, const SurfaceOptions& opts, int n) {
  const FrameField F = frame_field(S, n > 0 ? n : S.samples, opts);
  DevelopabilityReport rep;
  const std::size_t count = F.samples.size();
  rep.s.resize(count);
  rep.delta.resize(count);
  bool opposite = false;
  for (std::size_t j = 0; j < count; ++j) {
    const FrameSample& p = F.samples[j];
    const LocalFrame f = local_frame(S, p.u, opts);
    const MVec3 T = f.dc / f.sigma;
    const double dev_same = (T - p.q).euclidean_norm();
    const double dev_flip = (T + p.q).euclidean_norm();
    opposite = opposite || dev_flip < dev_same;
    rep.max_tangent_deviation = std::max(rep.max_tangent_deviation, std::min(dev_same, dev_flip));
    rep.s[j] = p.s;
    rep.delta[j] = distribution_parameter(S, p.u, opts);
    rep.max_abs_delta = std::max(rep.max_abs_delta, std::abs(rep.delta[j]));
  }
  rep.developable = rep.max_tangent_deviation <= tol;
  if (opposite) rep.notes.emplace_back("ruling is oriented against the striction tangent on part of the interval");

  // Angle between T and q in the plane span{q, a}.
  const int eps_c = local_frame(S, F.samples.front().u, opts).eps_c;
  if (F.timelike_surface && eps_c != F.eps_q) {
    rep.character_mismatch = true;
    rep.notes.emplace_back("CharacterMismatch: striction curve and ruling have different causal characters");
  } else {
    std::vector<double> theta(count), d(count);
    bool ok = true;
    for (std::size_t j = 0; j < count && ok; ++j) {
      const FrameSample& p = F.samples[j];
      const LocalFrame f = local_frame(S, p.u, opts);
      const MVec3 T = f.dc / f.sigma;
      if (F.timelike_surface) {
        const double ch = F.eps_q * inner(T, p.q);
        const double sh = F.eps_a() * inner(T, p.a);
        if (!(ch > 0.0)) {
          ok = false;
          break;
        }
        theta[j] = std::asinh(sh);
        d[j] = -sh / p.k1;
      } else {
        theta[j] = std::atan2(inner(T, p.a), inner(T, p.q));
        d[j] = std::sin(theta[j]) / p.k1;
      }
      rep.theta_delta_agreement = std::max(rep.theta_delta_agreement, std::abs(d[j] - rep.delta[j]));
    }
    if (ok) {
      rep.theta = std::move(theta);
      rep.d_profile = std::move(d);
    } else {
      rep.theta_delta_agreement = 0.0;
      rep.notes.emplace_back("striction tangent lies in the opposite time cone of the ruling; no hyperbolic angle");
    }
  }
  if (!rep.theta) rep.d_profile = rep.delta;
  return rep;
}

SurfaceType classify(const RuledSurfaceSpec& S, const SurfaceOptions& opts) {
  if (is_cylindrical(S, opts)) return SurfaceType::Cylindrical;
  return frame_field(S, std::min(S.samples, 128), opts).type;
}

}  // namespace ruled
