#include "ruled/corpus.hpp"

#include <cmath>

#include "ruled/numerics.hpp"

namespace ruled::corpus {

SurfaceDefinition analytic(const std::string& name, const std::array<std::string, 3>& base,
                           const std::array<std::string, 3>& ruling, double u_min, double u_max, int samples) {
  SurfaceDefinition d;
  d.name = name;
  d.kind = SurfaceDefinition::Kind::Analytic;
  d.base = base;
  d.ruling = ruling;
  d.u_min = u_min;
  d.u_max = u_max;
  d.samples = samples;
  return d;
}

namespace {

Entry make(SurfaceDefinition def, SurfaceType type, bool timelike, std::optional<double> k1,
           std::optional<double> k2, bool developable, std::optional<double> delta) {
  Entry e;
  e.definition = std::move(def);
  e.type = type;
  e.timelike_surface = timelike;
  e.k1 = k1;
  e.k2 = k2;
  e.developable = developable;
  e.delta = delta;
  if (type == SurfaceType::NPlus) e.limit_normal_sign = -1;
  if (type == SurfaceType::NMinus || type == SurfaceType::NTimes) e.limit_normal_sign = 1;
  return e;
}

std::string num(double x) { return format_number(x); }

}  // namespace

Entry helicoid() {
  return make(analytic("H1", {"u", "0", "0"}, {"0", "cos(u)", "sin(u)"}, 0.0, 2.0), SurfaceType::NPlus, true, 1.0,
              0.0, false, -1.0);
}

Entry nminus_conoid() {
  return make(analytic("nminus-conoid", {"0", "0", "u"}, {"cosh(u)", "sinh(u)", "0"}, 0.0, 1.0), SurfaceType::NMinus,
              true, 1.0, 0.0, false, -1.0);
}

Entry ntimes_conoid() {
  return make(analytic("ntimes-conoid", {"0", "0", "u"}, {"sinh(u)", "cosh(u)", "0"}, 0.0, 1.0), SurfaceType::NTimes,
              false, 1.0, 0.0, false, -1.0);
}

Entry offset_helicoid() {
  return make(analytic("offset-H1", {"u", "cos(u)", "sin(u)"}, {"0", "cos(u)", "sin(u)"}, 0.0, 2.0),
              SurfaceType::NPlus, true, 1.0, 0.0, false, -1.0);
}

Entry shifted_helicoid() {
  return make(analytic("shifted-H1", {"u+1", "0", "0"}, {"0", "cos(u)", "sin(u)"}, 0.0, 2.0), SurfaceType::NPlus,
              true, 1.0, 0.0, false, -1.0);
}

Entry tilted_nplus(double psi) {
  const std::string ch = num(std::cosh(psi));
  return make(analytic("tilted-nplus", {"u", "0", "0"}, {num(std::sinh(psi)), ch + "*cos(u)", ch + "*sin(u)"}, 0.0,
                       2.0),
              SurfaceType::NPlus, true, std::cosh(psi), std::sinh(psi), false, -1.0);
}

Entry tilted_nminus(double psi) {
  const std::string sh = num(std::sinh(psi));
  return make(analytic("tilted-nminus", {"u", "0", "0"}, {num(std::cosh(psi)), sh + "*cos(u)", sh + "*sin(u)"}, 0.0,
                       2.0),
              SurfaceType::NMinus, true, std::sinh(psi), std::cosh(psi), false, -1.0);
}

Entry tilted_ntimes(double psi) {
  const std::string c = num(std::cos(psi));
  return make(analytic("tilted-ntimes", {"0", "0", "u"}, {c + "*sinh(u)", c + "*cosh(u)", num(std::sin(psi))}, 0.0,
                       1.0),
              SurfaceType::NTimes, false, std::cos(psi), std::sin(psi), false, -1.0);
}

Entry hyperbola_developable() {
  return make(analytic("hyperbola-developable", {"sinh(u)", "cosh(u)", "0"}, {"cosh(u)", "sinh(u)", "0"}, 0.0, 1.0),
              SurfaceType::NMinus, true, 1.0, 0.0, true, 0.0);
}

Entry helix_developable() {
  return make(analytic("helix-developable", {"2*u", "cos(u)", "sin(u)"}, {"2", "-sin(u)", "cos(u)"}, 0.0, 2.0),
              SurfaceType::NMinus, true, 1.0 / 3.0, 2.0 / 3.0, true, 0.0);
}

Entry timelike_helix_developable() {
  return make(analytic("timelike-helix-developable", {"cosh(u)", "sinh(u)", "u"}, {"sinh(u)", "cosh(u)", "1"}, 0.0,
                       1.0),
              SurfaceType::NTimes, false, 0.5, 0.5, true, 0.0);
}

Entry cylinder() {
  return make(analytic("cylinder", {"0", "cos(u)", "sin(u)"}, {"1", "0", "0"}, 0.0, 2.0), SurfaceType::Cylindrical,
              true, std::nullopt, std::nullopt, true, std::nullopt);
}

Entry parabolic_cylinder() {
  return make(analytic("parabolic-cylinder", {"u*u", "u", "0"}, {"0", "0", "1"}, 0.0, 0.4), SurfaceType::Cylindrical,
              false, std::nullopt, std::nullopt, true, std::nullopt);
}

std::vector<Entry> developability_corpus() {
  return {helicoid(),     nminus_conoid(), ntimes_conoid(),        offset_helicoid(),   tilted_nplus(),
          tilted_nminus(), tilted_ntimes(), hyperbola_developable(), helix_developable(), timelike_helix_developable()};
}

std::vector<Entry> all() {
  std::vector<Entry> out = developability_corpus();
  out.push_back(shifted_helicoid());
  out.push_back(cylinder());
  out.push_back(parabolic_cylinder());
  return out;
}

namespace {

struct AngleDerivs {
  expr::Expr w, w1, w2, w3;

  explicit AngleDerivs(const expr::Expr& angle)
      : w(angle), w1(w.differentiate()), w2(w1.differentiate()), w3(w2.differentiate()) {}
};

MVec3 ch(double w) { return {std::cosh(w), std::sinh(w), 0.0}; }
MVec3 sh(double w) { return {std::sinh(w), std::cosh(w), 0.0}; }

MVec3 position(const AngleDerivs& a, double t0, double t) {
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(t - t0) / 0.1)));
  const double h = (t - t0) / panels;
  double x = 0.0;
  double y = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = t0 + h * i;
    x += numerics::gauss_legendre5([&](double s) { return std::cosh(a.w.eval(s)); }, lo, lo + h);
    y += numerics::gauss_legendre5([&](double s) { return std::sinh(a.w.eval(s)); }, lo, lo + h);
  }
  return {x, y, 0.0};
}

}  // namespace

CurvePtr hyperbolic_angle_curve(const expr::Expr& angle, double t0, double t1, int samples) {
  const AngleDerivs a(angle);
  auto fn = [a, t0](double t) {
    const double w = a.w.eval(t);
    const double w1 = a.w1.eval(t);
    const double w2 = a.w2.eval(t);
    CurveJet j;
    j.d = {position(a, t0, t), ch(w), sh(w) * w1, ch(w) * (w1 * w1) + sh(w) * w2};
    return j;
  };
  return std::make_shared<FunctionCurve>(fn, t0, t1, samples);
}

RuledSurfaceSpec angle_tangent_developable(const std::string& name, const expr::Expr& angle, double t0, double t1,
                                           int samples) {
  const AngleDerivs a(angle);
  auto ruling = [a](double t) {
    const double w = a.w.eval(t);
    const double w1 = a.w1.eval(t);
    const double w2 = a.w2.eval(t);
    const double w3 = a.w3.eval(t);
    CurveJet j;
    j.d = {ch(w), sh(w) * w1, ch(w) * (w1 * w1) + sh(w) * w2,
           sh(w) * (w1 * w1 * w1) + ch(w) * (3.0 * w1 * w2) + sh(w) * w3};
    return j;
  };
  RuledSurfaceSpec S;
  S.name = name;
  S.base = hyperbolic_angle_curve(angle, t0, t1, samples);
  S.ruling = std::make_shared<FunctionCurve>(ruling, t0, t1, samples);
  S.u_min = t0;
  S.u_max = t1;
  S.samples = samples;
  return S;
}

}  // namespace ruled::corpus
