#include "ruled/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ruled/errors.hpp"
#include "ruled/numerics.hpp"

namespace ruled::checks {

Check make_check(std::string name, std::string subject, double value, double tol, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.subject = std::move(subject);
  c.value = value;
  c.tol = tol;
  c.passed = std::isfinite(value) && value <= tol;
  c.detail = std::move(detail);
  return c;
}

double polygon_arc_length(const std::vector<MVec3>& points) {
  const std::size_t n = points.size();
  if (n < 2) return 0.0;
  auto chord = [&](std::size_t i, std::size_t j) {
    const MVec3 d = points[j] - points[i];
    return std::sqrt(std::abs(inner(d, d)));
  };
  double fine = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) fine += chord(i, i + 1);
  if (n < 3) return fine;
  double coarse = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) coarse += chord(i, i + 2);
  if (i + 1 < n) coarse += chord(i, n - 1);
  // Chord sums converge at second order.
  return (4.0 * fine - coarse) / 3.0;
}

double gram_deviation(const FrameField& F) {
  const double eq = F.eps_q;
  const double eh = F.eps_h;
  const double ea = F.eps_a();
  double worst = 0.0;
  for (const auto& p : F.samples) {
    worst = std::max({worst, std::abs(inner(p.q, p.q) - eq), std::abs(inner(p.h, p.h) - eh),
                      std::abs(inner(p.a, p.a) - ea), std::abs(inner(p.q, p.h)), std::abs(inner(p.q, p.a)),
                      std::abs(inner(p.h, p.a))});
  }
  return worst;
}

Check frame_orthonormality(const FrameField& F, const std::string& subject, double tol) {
  return make_check("frame.orthonormality", subject, gram_deviation(F), tol);
}

Check frame_identities(const FrameField& F, const std::string& subject, double tol) {
  return make_check("frame.product_identities", subject, verify_frenet(F).identities, tol);
}

Check frame_derivatives(const FrameField& F, const std::string& subject, double tol) {
  const FrenetResiduals r = verify_frenet(F);
  return make_check("frame.frenet_equations", subject, r.max_derivative(), tol);
}

Check pseudo_sphere(const FrameField& F, const std::string& subject, double tol) {
  double worst = 0.0;
  bool member = true;
  for (const auto& p : F.samples) {
    worst = std::max(worst, std::abs(inner(p.q, p.q) - F.eps_q));
    const PseudoSphere ps = pseudo_sphere_membership(p.q, 1.0, tol);
    member = member && ps == (F.eps_q > 0 ? PseudoSphere::OnS12 : PseudoSphere::OnH02);
  }
  Check c = make_check("frame.ruling_on_pseudo_sphere", subject, worst, tol, F.eps_q > 0 ? "S1^2" : "H0^2");
  c.passed = c.passed && member;
  return c;
}

namespace {

/// Integral of g ds over the frame.
double integrate_over_s(const FrameField& F, double (*g)(const FrameSample&)) {
  std::vector<double> y;
  y.reserve(F.samples.size());
  if (F.grid == FrameGrid::ArcLength) {
    for (const auto& p : F.samples) y.push_back(g(p));
  } else {
    for (const auto& p : F.samples) y.push_back(g(p) / p.k1);  // ds = dphi / k1
  }
  return numerics::composite_simpson(y, F.step());
}

}  // namespace

Check spherical_image_q(const FrameField& F, const std::string& subject, double tol) {
  std::vector<MVec3> q;
  for (const auto& p : F.samples) q.push_back(p.q);
  const double integral = integrate_over_s(F, [](const FrameSample& p) { return p.k1; });
  const double length = polygon_arc_length(q);
  char buf[96];
  std::snprintf(buf, sizeof buf, "int k1 ds = %.10g, length = %.10g", integral, length);
  return make_check("spherical_image.q_length", subject, std::abs(integral - length), tol, buf);
}

Check spherical_image_a(const FrameField& F, const std::string& subject, double tol) {
  std::vector<MVec3> a;
  for (const auto& p : F.samples) a.push_back(p.a);
  const double integral = integrate_over_s(F, [](const FrameSample& p) { return std::abs(p.k2); });
  const double length = polygon_arc_length(a);
  char buf[96];
  std::snprintf(buf, sizeof buf, "int |k2| ds = %.10g, length = %.10g", integral, length);
  return make_check("spherical_image.a_length", subject, std::abs(integral - length), tol, buf);
}

Check striction_orthogonality(const RuledSurfaceSpec& S, const std::string& subject, double tol,
                              const SurfaceOptions& opts) {
  double worst = 0.0;
  for (int i = 0; i < S.samples; ++i) {
    const double u = S.u_min + (S.u_max - S.u_min) * i / (S.samples - 1);
    const LocalFrame f = local_frame(S, u, opts);
    worst = std::max(worst, std::abs(inner(f.dq, f.dc)));
  }
  return make_check("striction.orthogonality", subject, worst, tol);
}

int limit_normal_sign(const FrameField& F) { return F.timelike_surface ? -F.eps_q : 1; }

Check limit_normal(const RuledSurfaceSpec& S, const std::string& subject, int sign, double v,
                   const SurfaceOptions& opts) {
  const double u = 0.5 * (S.u_min + S.u_max);
  const LocalFrame f = local_frame(S, u, opts);
  const MVec3 m = surface_normal(S, u, v, opts.tol_null);
  const MVec3 target = f.a * static_cast<double>(sign);
  const double dev = (m / m.euclidean_norm() - target / target.euclidean_norm()).euclidean_norm();
  char buf[64];
  std::snprintf(buf, sizeof buf, "v = %g", v);
  return make_check("surface.limit_normal", subject, dev, 10.0 / v, buf);
}

Check developability_equivalence(const RuledSurfaceSpec& S, const std::string& subject, double tol,
                                 const SurfaceOptions& opts, int n) {
  const DevelopabilityReport d = developability(S, tol, opts, n);
  const bool delta_verdict = d.max_abs_delta <= tol;
  Check c = make_check("theorem.developable_iff_tangent_is_ruling", subject, d.theta_delta_agreement, tol);
  c.passed = c.passed && delta_verdict == d.developable;
  c.detail = std::string("T=q ") + (d.developable ? "yes" : "no") + ", delta=0 " + (delta_verdict ? "yes" : "no") +
             (d.theta ? "" : ", no angle decomposition");
  return c;
}

Check ode3(const FrameField& F, const ScalarFunction& f, const std::string& subject, double tol) {
  return make_check("reconstruct.third_order_equation", subject, ode3_residual(F, f), tol);
}

std::vector<Check> frame_suite(const FrameField& F, const std::string& subject, const Tolerances& tol) {
  return {frame_orthonormality(F, subject, tol.orthonormal), frame_identities(F, subject, tol.frame),
          frame_derivatives(F, subject, tol.frame), pseudo_sphere(F, subject, tol.orthonormal),
          spherical_image_q(F, subject, tol.sphere), spherical_image_a(F, subject, tol.sphere)};
}

std::vector<Check> surface_suite(const RuledSurfaceSpec& S, const FrameField& F, const Tolerances& tol,
                                 const SurfaceOptions& opts) {
  std::vector<Check> out = frame_suite(F, S.name, tol);
  out.push_back(striction_orthogonality(S, S.name, tol.striction, opts));
  const int sign = limit_normal_sign(F);
  out.push_back(limit_normal(S, S.name, sign, 1e3, opts));
  out.push_back(limit_normal(S, S.name, sign, 1e4, opts));
  out.push_back(developability_equivalence(S, S.name, tol.delta, opts, static_cast<int>(F.samples.size())));
  return out;
}

void corrupt_frame(FrameField& F) {
  for (auto& p : F.samples) std::swap(p.h, p.a);
}

}  // namespace ruled::checks
