#include "ruled/curves.hpp"

#include <algorithm>
#include <cmath>

#include "ruled/numerics.hpp"

namespace ruled {

ParamCurve::ParamCurve(double u_min, double u_max, int sample_count)
    : u_min_(u_min), u_max_(u_max), sample_count_(sample_count) {
  if (!(u_min < u_max)) throw GeometryError(ErrorCode::InvalidArgument, "curve interval must satisfy u_min < u_max");
  if (sample_count < 2) throw GeometryError(ErrorCode::InvalidArgument, "curve needs at least two samples");
}

std::vector<double> ParamCurve::sample_grid() const {
  std::vector<double> grid(static_cast<std::size_t>(sample_count_));
  const double h = (u_max_ - u_min_) / (sample_count_ - 1);
  for (int i = 0; i < sample_count_; ++i) grid[static_cast<std::size_t>(i)] = u_min_ + h * i;
  grid.back() = u_max_;
  return grid;
}

JetVec to_jet(const CurveJet& j, int order) {
  JetVec v;
  v.x1 = Jet::constant(0.0, order);
  v.x2 = Jet::constant(0.0, order);
  v.x3 = Jet::constant(0.0, order);
  for (int k = 0; k <= order; ++k) {
    const MVec3& dk = j.d[static_cast<std::size_t>(k)];
    v.x1[k] = dk.x1();
    v.x2[k] = dk.x2();
    v.x3[k] = dk.x3();
  }
  return v;
}

ExprCurve::ExprCurve(std::array<expr::Expr, 3> components, double u_min, double u_max, int sample_count)
    : ParamCurve(u_min, u_max, sample_count) {
  derivs_[0] = std::move(components);
  for (std::size_t k = 1; k < derivs_.size(); ++k) {
    for (std::size_t i = 0; i < 3; ++i) derivs_[k][i] = derivs_[k - 1][i].differentiate();
  }
}

CurveJet ExprCurve::jet(double u) const {
  CurveJet j;
  for (std::size_t k = 0; k < derivs_.size(); ++k) {
    j.d[k] = MVec3(derivs_[k][0].eval(u), derivs_[k][1].eval(u), derivs_[k][2].eval(u));
  }
  return j;
}

namespace {

double first_or(const std::vector<double>& v, double fallback) { return v.empty() ? fallback : v.front(); }
double last_or(const std::vector<double>& v, double fallback) { return v.empty() ? fallback : v.back(); }

}  // namespace

SampledCurve::SampledCurve(std::vector<double> nodes, std::vector<MVec3> points)
    : ParamCurve(first_or(nodes, 0.0), last_or(nodes, 0.0), static_cast<int>(nodes.size())),
      nodes_(std::move(nodes)),
      points_(std::move(points)) {
  if (nodes_.size() != points_.size()) throw GeometryError(ErrorCode::InvalidArgument, "node/point count mismatch");
  if (nodes_.size() < 4) throw GeometryError(ErrorCode::InvalidArgument, "sampled curve needs at least four nodes");
  if (!numerics::strictly_increasing(nodes_)) {
    throw GeometryError(ErrorCode::InvalidArgument, "sample nodes must be strictly increasing");
  }
}

CurveJet SampledCurve::jet(double u) const {
  const std::size_t width = std::min<std::size_t>(6, nodes_.size());
  const std::size_t start = numerics::window_start(nodes_, u, width);
  const std::span<const double> window(nodes_.data() + start, width);
  const auto w = numerics::fornberg_weights(u, window, 3);
  CurveJet j;
  for (std::size_t k = 0; k < 4; ++k) {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
      const MVec3& p = points_[start + i];
      x1 += w[k][i] * p.x1();
      x2 += w[k][i] * p.x2();
      x3 += w[k][i] * p.x3();
    }
    j.d[k] = MVec3(x1, x2, x3);
  }
  return j;
}

FunctionCurve::FunctionCurve(std::function<CurveJet(double)> fn, double u_min, double u_max, int sample_count)
    : ParamCurve(u_min, u_max, sample_count), fn_(std::move(fn)) {}

bool derivatives_consistent(const ParamCurve& c, double rel_tol, int points) {
  const double span = c.u_max() - c.u_min();
  const double h = 1e-5 * span;
  for (int i = 0; i < points; ++i) {
    const double u = c.u_min() + span * (i + 0.5) / points;
    const MVec3 fd = (c.position(u + h) - c.position(u - h)) / (2.0 * h);
    const MVec3 d1 = c.derivative(u, 1);
    const double scale = std::max(1.0, d1.euclidean_norm());
    if ((fd - d1).euclidean_norm() > rel_tol * scale) return false;
  }
  return true;
}

ArcLengthMap::ArcLengthMap(std::function<double(double)> speed, double u_min, double u_max, int panels)
    : speed_(std::move(speed)) {
  if (panels < 1) panels = 1;
  nodes_.resize(static_cast<std::size_t>(panels) + 1);
  cumulative_.assign(nodes_.size(), 0.0);
  const double h = (u_max - u_min) / panels;
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i] = u_min + h * static_cast<double>(i);
  nodes_.back() = u_max;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    cumulative_[i] = cumulative_[i - 1] + numerics::gauss_legendre5(speed_, nodes_[i - 1], nodes_[i]);
  }
  speeds_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) speeds_[i] = speed_(nodes_[i]);
}

double ArcLengthMap::s_of_u(double u) const {
  u = std::clamp(u, nodes_.front(), nodes_.back());
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), u);
  std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - nodes_.begin()) - 1));
  i = std::min(i, nodes_.size() - 2);
  return cumulative_[i] + numerics::gauss_legendre5(speed_, nodes_[i], u);
}

double ArcLengthMap::u_of_s(double s) const {
  if (s <= 0.0) return nodes_.front();
  if (s >= cumulative_.back()) return nodes_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>((it - cumulative_.begin()) - 1);
  i = std::min(i, nodes_.size() - 2);
  const double lo = nodes_[i];
  const double w = nodes_[i + 1] - lo;
  const double s0 = cumulative_[i];
  const double s1 = cumulative_[i + 1];
  const double m0 = speeds_[i] * w;
  const double m1 = speeds_[i + 1] * w;
  // Cubic Hermite model of s on the panel, inverted by bisection-guarded Newton.
  auto model = [&](double t, double& ds) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    ds = (6.0 * t2 - 6.0 * t) * s0 + (3.0 * t2 - 4.0 * t + 1.0) * m0 + (-6.0 * t2 + 6.0 * t) * s1 + (3.0 * t2 - 2.0 * t) * m1;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * s0 + (t3 - 2.0 * t2 + t) * m0 + (-2.0 * t3 + 3.0 * t2) * s1 + (t3 - t2) * m1;
  };
  double a = 0.0;
  double b = 1.0;
  double t = (s - s0) / (s1 - s0);
  for (int iter = 0; iter < 60; ++iter) {
    double ds = 0.0;
    const double r = model(t, ds) - s;
    if (r > 0.0) b = t; else a = t;
    double next = ds > 0.0 ? t - r / ds : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - t) <= 1e-16) {
      t = next;
      break;
    }
    t = next;
  }
  double u = lo + t * w;
  // One Newton step against the exact quadrature.
  const double sp = speed_(u);
  if (sp > 0.0) {
    const double r = s0 + numerics::gauss_legendre5(speed_, lo, u) - s;
    u = std::clamp(u - r / sp, lo, lo + w);
  }
  return u;
}

namespace {

void require_consistent_velocity(const ParamCurve& c, double tol_null) {
  int sign = 0;
  for (double u : c.sample_grid()) {
    const MVec3 v = c.derivative(u, 1);
    const CausalCharacter ch = causal_character(v, tol_null);
    if (v.euclidean_norm_squared() == 0.0 || ch == CausalCharacter::Null) {
      throw GeometryError(ErrorCode::NullTangent, "velocity is null or zero at u = " + std::to_string(u));
    }
    const int s = ch == CausalCharacter::Timelike ? -1 : 1;
    if (sign != 0 && s != sign) {
      throw GeometryError(ErrorCode::NullTangent, "velocity changes causal character near u = " + std::to_string(u));
    }
    sign = s;
  }
}

struct TangentSample {
  MVec3 tangent;
  MVec3 dtangent_ds;
};

TangentSample tangent_with_rate(const ParamCurve& c, double u) {
  const JetVec pos = to_jet(c.jet(u), 3);
  const JetVec vel = pos.derivative();
  const Jet speed = sqrt(abs(inner(vel, vel)));
  const JetVec t = vel / speed;
  return {t.value(), t.derivative().value() / speed.value()};
}

struct Indicatrix {
  std::vector<double> u, s, clock;
  std::vector<MVec3> tangent;
};

Indicatrix build_indicatrix(const ParamCurve& c, int n, double tol_null, const char* label) {
  require_consistent_velocity(c, tol_null);
  ArcLengthMap map([&c](double u) { return lorentz_norm(c.derivative(u, 1)); }, c.u_min(), c.u_max(),
                   std::max(n, c.sample_count()));
  Indicatrix ind;
  const auto count = static_cast<std::size_t>(n);
  ind.u.resize(count);
  ind.s.resize(count);
  ind.tangent.resize(count);
  std::vector<double> speed(count);
  const double total = map.total();
  const double h = total / (n - 1);
  for (std::size_t j = 0; j < count; ++j) {
    ind.s[j] = h * static_cast<double>(j);
    ind.u[j] = map.u_of_s(ind.s[j]);
    const TangentSample ts = tangent_with_rate(c, ind.u[j]);
    ind.tangent[j] = ts.tangent;
    speed[j] = ts.dtangent_ds.euclidean_norm();
  }
  const double peak = *std::max_element(speed.begin(), speed.end());
  if (!(peak > 1e-12)) {
    throw GeometryError(ErrorCode::DegenerateIndicatrix, std::string(label) + " curve has a constant tangent");
  }
  for (std::size_t j = 1; j < count; ++j) {
    if (speed[j] <= 1e-9 * peak && speed[j - 1] <= 1e-9 * peak) {
      throw GeometryError(ErrorCode::DegenerateIndicatrix,
                          std::string(label) + " tangent is constant near u = " + std::to_string(ind.u[j]));
    }
  }
  ind.clock = numerics::cumulative_integral(speed, h);
  const double span = ind.clock.back();
  for (double& v : ind.clock) v /= span;
  if (!numerics::strictly_increasing(ind.clock)) {
    throw GeometryError(ErrorCode::DegenerateIndicatrix, std::string(label) + " indicatrix clock is not monotone");
  }
  return ind;
}

}  // namespace

ArcLengthTable arc_length_table(const ParamCurve& c, double tol_null) {
  require_consistent_velocity(c, tol_null);
  ArcLengthTable t;
  t.u = c.sample_grid();
  std::vector<double> speed(t.u.size());
  for (std::size_t i = 0; i < t.u.size(); ++i) speed[i] = lorentz_norm(c.derivative(t.u[i], 1));
  const double h = (c.u_max() - c.u_min()) / (c.sample_count() - 1);
  t.s = numerics::cumulative_integral(speed, h);
  t.total = numerics::composite_simpson(speed, h);
  return t;
}

MVec3 unit_tangent(const ParamCurve& c, double u, double tol_null) {
  const MVec3 v = c.derivative(u, 1);
  if (v.euclidean_norm_squared() == 0.0 || causal_character(v, tol_null) == CausalCharacter::Null) {
    throw GeometryError(ErrorCode::NullTangent, "velocity is null or zero at u = " + std::to_string(u));
  }
  return v / lorentz_norm(v);
}

SimilarCurveReport are_similar_curves(const ParamCurve& ca, const ParamCurve& cb, const SimilarCurveOptions& opts) {
  const int n = std::max(opts.samples, 9);
  const Indicatrix ia = build_indicatrix(ca, n, opts.tol_null, "alpha");
  const Indicatrix ib = build_indicatrix(cb, n, opts.tol_null, "beta");

  SimilarCurveReport report;
  report.samples.resize(ib.u.size());
  for (std::size_t j = 0; j < ib.u.size(); ++j) {
    SimilarCurveSample& m = report.samples[j];
    m.u_beta = ib.u[j];
    m.s_beta = ib.s[j];
    m.u_alpha = std::clamp(numerics::interpolate(ia.clock, ia.u, ib.clock[j]), ca.u_min(), ca.u_max());
    m.s_alpha = numerics::interpolate(ia.clock, ia.s, ib.clock[j]);
    m.tangent_deviation = (unit_tangent(ca, m.u_alpha, opts.tol_null) - ib.tangent[j]).euclidean_norm();
    report.max_tangent_deviation = std::max(report.max_tangent_deviation, m.tangent_deviation);
  }

  // ds_alpha/ds_beta by divided differences over five-point windows.
  std::vector<double> sb(report.samples.size()), sa(report.samples.size());
  for (std::size_t j = 0; j < sb.size(); ++j) {
    sb[j] = report.samples[j].s_beta;
    sa[j] = report.samples[j].s_alpha;
  }
  report.monotone = numerics::strictly_increasing(sa);
  bool positive = true;
  for (std::size_t j = 0; j < sb.size(); ++j) {
    const std::size_t start = numerics::window_start(sb, sb[j], 5);
    const std::span<const double> window(sb.data() + start, 5);
    const auto w = numerics::fornberg_weights(sb[j], window, 1);
    double d = 0.0;
    for (std::size_t i = 0; i < 5; ++i) d += w[1][i] * sa[start + i];
    report.samples[j].lambda = d;
    positive = positive && d > 0.0;
  }
  if (!report.monotone) report.notes.emplace_back("induced transformation is not monotone");
  if (!positive) report.notes.emplace_back("recovered lambda is not positive everywhere (orientation reversing)");
  if (report.max_tangent_deviation > opts.tol) report.notes.emplace_back("tangent images disagree under the matching");
  report.is_similar = report.monotone && positive && report.max_tangent_deviation <= opts.tol;
  return report;
}

}  // namespace ruled
