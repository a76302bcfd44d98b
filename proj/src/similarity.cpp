#include "ruled/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ruled/errors.hpp"
#include "ruled/numerics.hpp"

namespace ruled {

std::string_view to_string(SimilarityMode m) {
  return m == SimilarityMode::ByDefinition ? "ByDefinition" : "ByInvariants";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Cylindrical: return "Cylindrical";
    case Family::Conoid: return "Conoid";
    case Family::None: return "None";
  }
  return "None";
}

namespace {

constexpr double kK1Floor = 1e-9;
constexpr double kK2Floor = 1e-6;

void require_positive_k1(const FrameField& F) {
  int run = 0;
  for (const auto& p : F.samples) {
    run = p.k1 <= kK1Floor ? run + 1 : 0;
    if (run >= 2 || !std::isfinite(p.k1)) {
      throw GeometryError(ErrorCode::DegenerateK1, "k1 vanishes near s = " + std::to_string(p.s));
    }
  }
}

/// Per-sample columns of a frame keyed by phi.
struct Columns {
  std::vector<double> phi, s, k1, k2, f;
  std::vector<MVec3> q, h, a;
};

Columns columns(const FrameField& F) {
  const PhiTable t = total_curvature_param(F);
  Columns c;
  c.phi = t.phi;
  c.s = t.s;
  for (const auto& p : F.samples) {
    c.k1.push_back(p.k1);
    c.k2.push_back(p.k2);
    c.f.push_back(p.k2 / p.k1);
    c.q.push_back(p.q);
    c.h.push_back(p.h);
    c.a.push_back(p.a);
  }
  return c;
}

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

/// Range of phi_beta whose image phi_beta + offset lies in the alpha range.
Window overlap(const Columns& A, const Columns& B, double offset) {
  return {std::max(0.0, -offset), std::min(B.phi.back(), A.phi.back() - offset)};
}

double profile_deviation(const Columns& A, const Columns& B, double offset) {
  const Window w = overlap(A, B, offset);
  if (!(w.hi > w.lo)) return std::numeric_limits<double>::infinity();
  const double slack = 1e-12 * std::max(1.0, w.hi);
  double worst = 0.0;
  for (std::size_t j = 0; j < B.phi.size(); ++j) {
    if (B.phi[j] < w.lo - slack || B.phi[j] > w.hi + slack) continue;
    worst = std::max(worst, std::abs(numerics::interpolate(A.phi, A.f, B.phi[j] + offset) - B.f[j]));
  }
  return worst;
}

double best_offset(const Columns& A, const Columns& B) {
  const double m = 0.5 * std::min(A.phi.back(), B.phi.back());
  constexpr int kScan = 41;
  const double step = 2.0 * m / (kScan - 1);
  double best = 0.0;
  double best_dev = profile_deviation(A, B, 0.0);
  for (int i = 0; i < kScan; ++i) {
    const double d = -m + step * i;
    const double dev = profile_deviation(A, B, d);
    if (dev < best_dev) {
      best_dev = dev;
      best = d;
    }
  }
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = best - step;
  double b = best + step;
  double x1 = b - golden * (b - a);
  double x2 = a + golden * (b - a);
  double f1 = profile_deviation(A, B, x1);
  double f2 = profile_deviation(A, B, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - golden * (b - a);
      f1 = profile_deviation(A, B, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (b - a);
      f2 = profile_deviation(A, B, x2);
    }
  }
  const double refined = 0.5 * (a + b);
  return profile_deviation(A, B, refined) < best_dev ? refined : best;
}

}  // namespace

PhiTable total_curvature_param(const FrameField& F) {
  require_positive_k1(F);
  PhiTable t;
  const std::size_t n = F.samples.size();
  t.s.resize(n);
  std::vector<double> k1(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.s[i] = F.samples[i].s;
    k1[i] = F.samples[i].k1;
  }
  if (F.grid == FrameGrid::ArcLength) {
    t.phi = numerics::cumulative_integral(k1, F.step());
  } else {
    t.phi.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.phi[i] = F.samples[i].phi - F.samples.front().phi;
  }
  if (!numerics::strictly_increasing(t.phi)) {
    throw GeometryError(ErrorCode::DegenerateK1, "total curvature is not strictly increasing");
  }
  return t;
}

RatioProfile curvature_ratio_profile(const FrameField& F, int n) {
  const Columns c = columns(F);
  const int count = n > 0 ? n : static_cast<int>(F.samples.size());
  RatioProfile r;
  r.phi.resize(static_cast<std::size_t>(count));
  r.f.resize(r.phi.size());
  const double span = c.phi.back();
  for (int i = 0; i < count; ++i) {
    const double phi = count > 1 ? span * i / (count - 1) : 0.0;
    r.phi[static_cast<std::size_t>(i)] = phi;
    r.f[static_cast<std::size_t>(i)] = numerics::interpolate(c.phi, c.f, phi);
  }
  return r;
}

SimilarityReport are_similar_ruled(const FrameField& A, const FrameField& B, const SimilarityOptions& opts) {
  if (A.timelike_surface != B.timelike_surface) {
    throw GeometryError(ErrorCode::KindMismatch, "one surface is timelike and the other spacelike");
  }
  if (A.timelike_surface && A.eps_q != B.eps_q) {
    throw GeometryError(ErrorCode::KindMismatch, "timelike surfaces of different types (NMinus and NPlus)");
  }
  const Columns ca = columns(A);
  const Columns cb = columns(B);

  SimilarityReport rep;
  rep.mode = opts.mode;
  rep.asymptotic_normal_sign = A.timelike_surface ? A.eps_q * B.eps_q : 1;
  rep.phi_offset = opts.search_phi_offset ? best_offset(ca, cb) : 0.0;
  const Window w = overlap(ca, cb, rep.phi_offset);
  rep.phi_overlap = std::max(0.0, w.hi - w.lo);

  const double slack = 1e-12 * std::max(1.0, w.hi);
  bool any_k2 = false;
  double consistency = 0.0;
  bool lambda_positive = true;
  double ruling = 0.0, normal = 0.0, asym = 0.0;
  for (std::size_t j = 0; j < cb.phi.size(); ++j) {
    if (cb.phi[j] < w.lo - slack || cb.phi[j] > w.hi + slack) continue;
    const double phi_a = cb.phi[j] + rep.phi_offset;
    MatchedSample m;
    m.s_beta = cb.s[j];
    m.phi = cb.phi[j];
    m.s_alpha = numerics::interpolate(ca.phi, ca.s, phi_a);
    m.f_alpha = numerics::interpolate(ca.phi, ca.f, phi_a);
    m.f_beta = cb.f[j];
    const double k1a = numerics::interpolate(ca.phi, ca.k1, phi_a);
    const double k2a = numerics::interpolate(ca.phi, ca.k2, phi_a);
    m.lambda = cb.k1[j] / k1a;
    lambda_positive = lambda_positive && m.lambda > 0.0;
    rep.f_profile_deviation = std::max(rep.f_profile_deviation, std::abs(m.f_alpha - m.f_beta));
    if (std::abs(k2a) > kK2Floor && std::abs(cb.k2[j]) > kK2Floor) {
      any_k2 = true;
      consistency = std::max(consistency, std::abs(m.lambda - cb.k2[j] / k2a));
    }
    ruling = std::max(ruling, (numerics::interpolate(ca.phi, ca.q, phi_a) - cb.q[j]).euclidean_norm());
    normal = std::max(normal, (numerics::interpolate(ca.phi, ca.h, phi_a) - cb.h[j]).euclidean_norm());
    asym = std::max(asym, (numerics::interpolate(ca.phi, ca.a, phi_a) - cb.a[j] * rep.asymptotic_normal_sign)
                              .euclidean_norm());
    rep.matched.push_back(m);
  }
  if (any_k2) {
    rep.lambda_consistency = consistency;
  } else {
    rep.notes.emplace_back("k2 vanishes on both surfaces; lambda comes from k1 alone");
  }

  const bool nondegenerate = rep.phi_overlap > 1e-9 && rep.matched.size() >= 2;
  if (!nondegenerate) rep.notes.emplace_back("phi ranges do not overlap on a nondegenerate interval");
  if (!lambda_positive) rep.notes.emplace_back("variable transformation is not orientation preserving");
  rep.is_similar = nondegenerate && lambda_positive && rep.f_profile_deviation <= opts.tol;

  if (opts.mode == SimilarityMode::ByDefinition) {
    rep.ruling_deviation = ruling;
    rep.central_normal_deviation = normal;
    rep.asymptotic_normal_deviation = asym;
    rep.is_similar = rep.is_similar && ruling <= opts.tol && normal <= opts.tol;
    if (ruling > opts.tol) rep.notes.emplace_back("rulings differ under the recovered transformation");
  }
  return rep;
}

DevelopableSimilarity check_developable_similarity(const RuledSurfaceSpec& A, const RuledSurfaceSpec& B,
                                                   const DevelopableSimilarityOptions& opts) {
  DevelopableSimilarity out;
  bool hypothesis = true;
  for (const RuledSurfaceSpec* S : {&A, &B}) {
    const DevelopabilityReport d = developability(*S, opts.developable_tol, opts.surface, opts.samples);
    if (!d.developable) {
      throw GeometryError(ErrorCode::NotDevelopable, "surface '" + S->name + "' is not developable");
    }
    hypothesis = hypothesis && !d.character_mismatch;
  }
  out.character_hypothesis = hypothesis;
  if (!hypothesis) out.notes.emplace_back("striction curve and ruling differ in causal character");

  const FrameField fa = frame_field(A, opts.samples, opts.surface);
  const FrameField fb = frame_field(B, opts.samples, opts.surface);
  SimilarityOptions so;
  so.tol = opts.similarity_tol;
  so.mode = SimilarityMode::ByDefinition;
  try {
    out.surface_report = are_similar_ruled(fa, fb, so);
    out.surfaces_similar = out.surface_report.is_similar;
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::KindMismatch) throw;
    out.notes.emplace_back(e.what());
  }

  SimilarCurveOptions co;
  co.tol = opts.curve_tol;
  co.tol_null = opts.surface.tol_null;
  const CurvePtr ca = striction_curve(A, opts.surface);
  const CurvePtr cb = striction_curve(B, opts.surface);
  out.curve_report = are_similar_curves(*ca, *cb, co);
  out.striction_curves_similar = out.curve_report.is_similar;
  out.theorem_holds = out.surfaces_similar == out.striction_curves_similar;
  return out;
}

FamilyReport family_check(const std::vector<RuledSurfaceSpec>& surfaces, double k2_tol, const SurfaceOptions& opts) {
  FamilyReport rep;
  if (surfaces.empty()) {
    rep.kind = "mixed";
    return rep;
  }
  int cylinders = 0;
  int conoids = 0;
  int timelike = 0;
  for (const auto& S : surfaces) {
    bool is_timelike;
    if (is_cylindrical(S, opts)) {
      ++cylinders;
      is_timelike = surface_is_timelike(S, 0.5 * (S.u_min + S.u_max), 0.0, opts.tol_null);
    } else {
      try {
        const FrameField F = frame_field(S, std::min(S.samples, 256), opts);
        is_timelike = F.timelike_surface;
        double k1_min = std::numeric_limits<double>::infinity();
        double k2_max = 0.0;
        for (const auto& p : F.samples) {
          k1_min = std::min(k1_min, p.k1);
          k2_max = std::max(k2_max, std::abs(p.k2));
        }
        if (k1_min > opts.k1_floor && k2_max <= k2_tol) ++conoids;
      } catch (const GeometryError& e) {
        rep.notes.push_back("'" + S.name + "': " + e.what());
        rep.kind = "mixed";
        return rep;
      }
    }
    if (is_timelike) ++timelike;
  }
  const int n = static_cast<int>(surfaces.size());
  rep.kind = timelike == n ? "timelike" : (timelike == 0 ? "spacelike" : "mixed");
  if (cylinders == n) {
    rep.family = Family::Cylindrical;
    rep.notes.emplace_back("cylindrical surfaces form a family although their constant rulings may differ");
  } else if (conoids == n && rep.kind != "mixed") {
    rep.family = Family::Conoid;
  }
  return rep;
}

}  // namespace ruled
