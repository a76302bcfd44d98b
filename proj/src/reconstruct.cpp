#include "ruled/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ruled/errors.hpp"
#include "ruled/numerics.hpp"

namespace ruled {

ScalarFunction::ScalarFunction(double constant)
    : value_([constant](double) { return constant; }),
      derivative_([](double) { return 0.0; }),
      expr_(expr::Expr::literal(constant)),
      description_(expr::Expr::literal(constant).to_string()) {}

ScalarFunction::ScalarFunction(expr::Expr e) : expr_(e), description_(e.to_string()) {
  const expr::Expr d = e.differentiate();
  value_ = [e](double x) { return e.eval(x); };
  derivative_ = [d](double x) { return d.eval(x); };
}

ScalarFunction::ScalarFunction(std::function<double(double)> value, std::function<double(double)> derivative,
                               std::string description)
    : value_(std::move(value)), derivative_(std::move(derivative)), description_(std::move(description)) {}

std::string_view to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::TimelikeMinus: return "timelike-";
    case ProfileKind::TimelikePlus: return "timelike+";
    case ProfileKind::Spacelike: return "spacelike";
  }
  return "unknown";
}

std::optional<ProfileKind> parse_profile_kind(std::string_view text) {
  if (text == "timelike-" || text == "timelike_minus" || text == "NMinus") return ProfileKind::TimelikeMinus;
  if (text == "timelike+" || text == "timelike_plus" || text == "NPlus") return ProfileKind::TimelikePlus;
  if (text == "spacelike" || text == "NTimes") return ProfileKind::Spacelike;
  return std::nullopt;
}

SurfaceType surface_type(ProfileKind k) {
  switch (k) {
    case ProfileKind::TimelikeMinus: return SurfaceType::NMinus;
    case ProfileKind::TimelikePlus: return SurfaceType::NPlus;
    case ProfileKind::Spacelike: return SurfaceType::NTimes;
  }
  return SurfaceType::NMinus;
}

InitialFrame default_initial_frame(ProfileKind k) {
  switch (k) {
    case ProfileKind::TimelikeMinus: return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case ProfileKind::TimelikePlus: return {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    case ProfileKind::Spacelike: return {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  }
  return {};
}

namespace {

struct Signs {
  double q, h, a;  // <q,q>, <h,h>, <a,a>
  bool timelike_surface;
  double eps;  // eps_q
};

Signs signs(ProfileKind k) {
  switch (k) {
    case ProfileKind::TimelikeMinus: return {-1, 1, 1, true, -1};
    case ProfileKind::TimelikePlus: return {1, 1, -1, true, 1};
    case ProfileKind::Spacelike: return {1, -1, 1, false, 1};
  }
  return {};
}

double gram_drift(const MVec3& q, const MVec3& h, const MVec3& a, const Signs& sg) {
  return std::max({std::abs(inner(q, q) - sg.q), std::abs(inner(h, h) - sg.h), std::abs(inner(a, a) - sg.a),
                   std::abs(inner(q, h)), std::abs(inner(q, a)), std::abs(inner(h, a))});
}

double identity_residual(const MVec3& q, const MVec3& h, const MVec3& a, const Signs& sg) {
  if (sg.timelike_surface) {
    return std::max({(lorentz_cross(q, h) - a * sg.eps).euclidean_norm(),
                     (lorentz_cross(h, a) + q * sg.eps).euclidean_norm(), (lorentz_cross(a, q) + h).euclidean_norm()});
  }
  return std::max({(lorentz_cross(q, h) + a).euclidean_norm(), (lorentz_cross(h, a) + q).euclidean_norm(),
                   (lorentz_cross(a, q) - h).euclidean_norm()});
}

MVec3 unit_with_sign(const MVec3& v, double sign) {
  const double n2 = inner(v, v);
  if (!(std::abs(n2) > 1e-6) || n2 * sign < 0.0) {
    throw GeometryError(ErrorCode::FrameDegeneration, "frame vector became null or changed causal character");
  }
  return v / std::sqrt(std::abs(n2));
}

void reorthonormalize(MVec3& q, MVec3& h, MVec3& a, const Signs& sg) {
  q = unit_with_sign(q, sg.q);
  h = unit_with_sign(h - q * (sg.q * inner(h, q)), sg.h);
  a = unit_with_sign(a - q * (sg.q * inner(a, q)) - h * (sg.h * inner(a, h)), sg.a);
}

struct State {
  MVec3 q, h, a;
  double s = 0.0;

  State operator+(const State& o) const { return {q + o.q, h + o.h, a + o.a, s + o.s}; }
  State operator*(double k) const { return {q * k, h * k, a * k, s * k}; }
};

}  // namespace

void validate_initial_frame(const InitialFrame& fr, ProfileKind k, double tol) {
  const Signs sg = signs(k);
  if (gram_drift(fr.q, fr.h, fr.a, sg) > tol) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "initial frame is not orthonormal with the signs of kind " + std::string(to_string(k)));
  }
  if (identity_residual(fr.q, fr.h, fr.a, sg) > tol) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "initial frame violates the vector-product identities of kind " + std::string(to_string(k)));
  }
}

IntegrationResult integrate_frenet_detailed(const InvariantProfile& p, int steps) {
  if (steps < 16) throw GeometryError(ErrorCode::InvalidArgument, "at least 16 integration steps are required");
  if (!(p.phi_max > p.phi_min)) throw GeometryError(ErrorCode::InvalidArgument, "empty phi range");
  validate_initial_frame(p.initial, p.kind, 1e-10);
  const Signs sg = signs(p.kind);

  auto rhs = [&](double phi, const State& y) {
    const double f = p.f(phi);
    const double k1 = p.k1_of_s(y.s);
    if (!(k1 > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "k1 must stay positive");
    State d;
    d.q = y.h;
    if (sg.timelike_surface) {
      d.h = y.q * (-sg.eps) + y.a * f;
      d.a = y.h * (sg.eps * f);
    } else {
      d.h = y.q + y.a * f;
      d.a = y.h * f;
    }
    d.s = 1.0 / k1;
    return d;
  };

  IntegrationResult out;
  FrameField& F = out.frame;
  F.eps_q = static_cast<int>(sg.q);
  F.eps_h = static_cast<int>(sg.h);
  F.timelike_surface = sg.timelike_surface;
  F.type = surface_type(p.kind);
  F.grid = FrameGrid::TotalCurvature;
  F.samples.resize(static_cast<std::size_t>(steps) + 1);

  const double dphi = (p.phi_max - p.phi_min) / steps;
  State y{p.initial.q, p.initial.h, p.initial.a, 0.0};
  auto record = [&](std::size_t i, double phi) {
    FrameSample& smp = F.samples[i];
    smp.u = phi;
    smp.phi = phi;
    smp.s = y.s;
    smp.q = y.q;
    smp.h = y.h;
    smp.a = y.a;
    smp.k1 = p.k1_of_s(y.s);
    smp.k2 = p.f(phi) * smp.k1;
  };
  record(0, p.phi_min);
  for (int i = 0; i < steps; ++i) {
    const double phi = p.phi_min + dphi * i;
    const State k1 = rhs(phi, y);
    const State k2 = rhs(phi + 0.5 * dphi, y + k1 * (0.5 * dphi));
    const State k3 = rhs(phi + 0.5 * dphi, y + k2 * (0.5 * dphi));
    const State k4 = rhs(phi + dphi, y + k3 * dphi);
    y = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dphi / 6.0);
    out.max_drift = std::max(out.max_drift, gram_drift(y.q, y.h, y.a, sg));
    reorthonormalize(y.q, y.h, y.a, sg);
    record(static_cast<std::size_t>(i) + 1, i + 1 == steps ? p.phi_max : p.phi_min + dphi * (i + 1));
  }
  return out;
}

FrameField integrate_frenet(const InvariantProfile& p, int steps) { return integrate_frenet_detailed(p, steps).frame; }

double ode3_residual(const FrameField& F, const ScalarFunction& f) {
  const std::size_t n = F.samples.size();
  if (n < 9) throw GeometryError(ErrorCode::InvalidArgument, "third-order residual needs at least nine samples");
  if (F.grid != FrameGrid::TotalCurvature) {
    throw GeometryError(ErrorCode::InvalidArgument, "third-order residual needs a frame sampled in phi");
  }
  for (const auto& p : F.samples) {
    if (!(std::abs(f(p.phi)) >= 1e-6)) {
      throw GeometryError(ErrorCode::DegenerateF, "|f| < 1e-6 at phi = " + std::to_string(p.phi));
    }
  }
  std::vector<MVec3> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = F.samples[i].q;
  const double h = F.step();
  const double eps = F.eps_q;
  double worst = 0.0;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    const FrameSample& p = F.samples[i];
    const double fv = f(p.phi);
    const double df = f.derivative(p.phi);
    const MVec3 d1 = numerics::central_first<MVec3>(q, i, h);
    const MVec3 d2 = numerics::central_second<MVec3>(q, i, h);
    const MVec3 d3 = numerics::central_third<MVec3>(q, i, h);
    MVec3 residual, a_from_q;
    if (F.timelike_surface) {
      residual = d3 / fv - d2 * (df / (fv * fv)) + d1 * (eps * (1.0 - fv * fv) / fv) - p.q * (eps * df / (fv * fv));
      a_from_q = (d2 + p.q * eps) / fv;
    } else {
      residual = d3 / fv - d2 * (df / (fv * fv)) - d1 * ((1.0 + fv * fv) / fv) + p.q * (df / (fv * fv));
      a_from_q = (d2 - p.q) / fv;
    }
    worst = std::max({worst, residual.euclidean_norm(), (a_from_q - p.a).euclidean_norm()});
  }
  return worst;
}

RuledSurfaceSpec build_surface(const FrameField& F, const BuildMode& mode, std::string name) {
  const std::size_t n = F.samples.size();
  if (n < 4) throw GeometryError(ErrorCode::InvalidArgument, "frame has too few samples to build a surface");
  std::vector<double> nodes(n);
  std::vector<MVec3> rulings(n);
  std::array<std::vector<double>, 3> g;
  for (auto& col : g) col.resize(n);
  const double eps = F.eps_q;
  for (std::size_t i = 0; i < n; ++i) {
    const FrameSample& p = F.samples[i];
    nodes[i] = F.grid == FrameGrid::TotalCurvature ? p.phi : p.s;
    rulings[i] = p.q;
    MVec3 T = p.q;
    if (mode.theta) {
      const double th = (*mode.theta)(p.s);
      if (!std::isfinite(th)) {
        throw GeometryError(ErrorCode::CharacterViolation, "angle is not finite at s = " + std::to_string(p.s));
      }
      const double c = F.timelike_surface ? std::cosh(th) : std::cos(th);
      const double sn = F.timelike_surface ? std::sinh(th) : std::sin(th);
      if (!std::isfinite(c) || !std::isfinite(sn)) {
        throw GeometryError(ErrorCode::CharacterViolation, "angle overflows at s = " + std::to_string(p.s));
      }
      T = p.q * c + p.a * sn;
      const double tt = inner(T, T);
      if (!std::isfinite(tt) || std::abs(tt - eps) > 1e-6) {
        throw GeometryError(ErrorCode::CharacterViolation,
                            "striction tangent loses the causal character of the ruling at s = " + std::to_string(p.s));
      }
    }
    // d/dphi = (1/k1) d/ds on a phi grid.
    const double scale = F.grid == FrameGrid::TotalCurvature ? 1.0 / p.k1 : 1.0;
    for (int k = 0; k < 3; ++k) g[static_cast<std::size_t>(k)][i] = T[k] * scale;
  }
  const double h = F.step();
  std::array<std::vector<double>, 3> c;
  for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = numerics::cumulative_integral(g[static_cast<std::size_t>(k)], h);
  std::vector<MVec3> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = MVec3(c[0][i], c[1][i], c[2][i]);

  RuledSurfaceSpec S;
  S.name = std::move(name);
  S.base = std::make_shared<SampledCurve>(nodes, std::move(points));
  S.ruling = std::make_shared<SampledCurve>(nodes, std::move(rulings));
  S.u_min = nodes.front();
  S.u_max = nodes.back();
  S.samples = static_cast<int>(n);
  return S;
}

std::vector<FamilyMember> generate_similar_family(const ScalarFunction& f, ProfileKind kind,
                                                  const std::vector<ScalarFunction>& k1_list,
                                                  const InitialFrame& initial, double phi_min, double phi_max,
                                                  int steps) {
  std::vector<FamilyMember> out;
  out.reserve(k1_list.size());
  for (std::size_t i = 0; i < k1_list.size(); ++i) {
    InvariantProfile p;
    p.f = f;
    p.kind = kind;
    p.phi_min = phi_min;
    p.phi_max = phi_max;
    p.k1_of_s = k1_list[i];
    p.initial = initial;
    FamilyMember m;
    m.frame = integrate_frenet(p, steps);
    m.surface = build_surface(m.frame, BuildMode::developable(), "member" + std::to_string(i));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace ruled
