// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "canned.hpp"
#include "ruled/checks.hpp"
#include "ruled/corpus.hpp"
#include "ruled/errors.hpp"
#include "ruled/reconstruct.hpp"
#include "ruled/similarity.hpp"
#include "ruled/surface_file.hpp"

#ifndef RULED_CLI_PATH
#error "RULED_CLI_PATH must name the command line binary"
#endif

using namespace ruled;
namespace fs = std::filesystem;

namespace {

/// Collects failure reasons for one criterion.
struct Verdict {
  std::ostringstream why;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

RuledSurfaceSpec spec(const corpus::Entry& e) { return to_spec(e.definition); }

InvariantProfile profile(ScalarFunction f, ProfileKind kind, ScalarFunction k1 = 1.0) {
  InvariantProfile p;
  p.f = std::move(f);
  p.kind = kind;
  p.k1_of_s = std::move(k1);
  p.initial = default_initial_frame(kind);
  return p;
}

constexpr ProfileKind kKinds[] = {ProfileKind::TimelikeMinus, ProfileKind::TimelikePlus, ProfileKind::Spacelike};

void frame_identities(Verdict& v) {
  for (const corpus::Entry& e : {corpus::helicoid(), corpus::nminus_conoid(), corpus::ntimes_conoid()}) {
    const FrameField F = frame_field(spec(e), 512);
    const FrenetResiduals r = verify_frenet(F);
    v.require(r.max() < 1e-6, e.definition.name + " residual " + num(r.max()));
    v.require(F.type == e.type, e.definition.name + " type " + std::string(to_string(F.type)));
    for (const auto& p : F.samples) {
      if (std::abs(p.k1 - 1.0) > 1e-8 || std::abs(p.k2) > 1e-8) {
        v.require(false, e.definition.name + " k1/k2 at u=" + num(p.u));
        break;
      }
    }
  }
}

void developability_theorem(Verdict& v) {
  int developable = 0;
  for (const corpus::Entry& e : corpus::developability_corpus()) {
    const RuledSurfaceSpec S = spec(e);
    const DevelopabilityReport d = developability(S, 1e-6);
    const bool delta_test = d.max_abs_delta <= 1e-6;
    developable += d.developable;
    v.require(d.developable == e.developable, S.name + " T=q verdict");
    v.require(delta_test == d.developable, S.name + " delta test disagrees");
    v.require(d.theta_delta_agreement <= 1e-6, S.name + " theta/delta " + num(d.theta_delta_agreement));
    v.require(checks::developability_equivalence(S, S.name, 1e-6).passed, S.name + " equivalence");
  }
  v.require(developable == 3, "expected 3 developable surfaces, got " + std::to_string(developable));
}

void third_order_equation(Verdict& v) {
  for (ProfileKind k : kKinds) {
    for (const char* fe : {"0.5", "1+0.1*sin(u)"}) {
      const ScalarFunction f = expr::parse(fe);
      const std::string tag = std::string(to_string(k)) + " f=" + fe;
      const double r = ode3_residual(integrate_frenet(profile(f, k), 2000), f);
      v.require(r < 1e-4, tag + " residual " + num(r));
      const double coarse = ode3_residual(integrate_frenet(profile(f, k), 20), f);
      const double fine = ode3_residual(integrate_frenet(profile(f, k), 40), f);
      const double order = std::log2(coarse / fine);
      v.require(order >= 3.5, tag + " order " + num(order));
    }
  }
}

void similarity_family(Verdict& v) {
  const std::vector<ScalarFunction> k1s = {1.0, 2.0, expr::parse("1+u")};
  const auto fam = generate_similar_family(0.3, ProfileKind::TimelikeMinus, k1s,
                                           default_initial_frame(ProfileKind::TimelikeMinus), 0.0, 1.0, 1000);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (i == j) continue;
      const SimilarityReport r = are_similar_ruled(fam[i].frame, fam[j].frame);
      const std::string tag = std::to_string(i) + "-" + std::to_string(j);
      v.require(r.is_similar, tag + " not similar");
      double err = 0.0;
      for (const auto& m : r.matched) err = std::max(err, std::abs(m.lambda - k1s[j](m.s_beta) / k1s[i](m.s_alpha)));
      v.require(!r.matched.empty() && err <= 1e-4, tag + " lambda " + num(err));
      v.require(r.lambda_consistency && *r.lambda_consistency <= 1e-5, tag + " k2 ratio");
    }
  }
  const SimilarityReport neg = are_similar_ruled(integrate_frenet(profile(0.3, ProfileKind::TimelikeMinus), 1000),
                                                 integrate_frenet(profile(0.6, ProfileKind::TimelikeMinus), 1000));
  v.require(!neg.is_similar, "0.3 vs 0.6 accepted");
  v.require(std::abs(neg.f_profile_deviation - 0.3) <= 1e-3, "f deviation " + num(neg.f_profile_deviation));
}

void developable_similarity(Verdict& v) {
  const RuledSurfaceSpec a = corpus::angle_tangent_developable("alpha", expr::parse("u"), 0.25, 2.25);
  const RuledSurfaceSpec b = corpus::angle_tangent_developable("beta", expr::parse("u*u"), 0.5, 1.5);
  const DevelopableSimilarity pos = check_developable_similarity(a, b);
  v.require(pos.surfaces_similar && pos.striction_curves_similar, "pair not similar");
  double lam = 0.0;
  for (const auto& m : pos.surface_report.matched) lam = std::max(lam, std::abs(m.lambda - 2.0 * (m.s_beta + 0.5)));
  double clam = 0.0;
  double sa = 0.0;
  for (const auto& s : pos.curve_report.samples) {
    clam = std::max(clam, std::abs(s.lambda - 2.0 * s.u_beta));
    sa = std::max(sa, std::abs(s.u_alpha - s.u_beta * s.u_beta));
  }
  v.require(!pos.surface_report.matched.empty() && lam <= 1e-3, "surface lambda " + num(lam));
  v.require(!pos.curve_report.samples.empty() && clam <= 1e-3, "curve lambda " + num(clam));
  v.require(sa <= 1e-3, "s_alpha " + num(sa));

  const RuledSurfaceSpec c = corpus::angle_tangent_developable("c", expr::parse("u"), 0.0, 1.0);
  const RuledSurfaceSpec d = corpus::angle_tangent_developable("d", expr::parse("u+3"), 0.0, 1.0);
  const DevelopableSimilarity neg = check_developable_similarity(c, d);
  v.require(!neg.surfaces_similar && !neg.striction_curves_similar, "disjoint pair reported similar");

  std::vector<RuledSurfaceSpec> dev = {a, b, c, d};
  for (const corpus::Entry& e : corpus::developability_corpus()) {
    if (e.developable) dev.push_back(spec(e));
  }
  int cases = 0;
  for (const auto& x : dev) {
    for (const auto& y : dev) {
      try {
        const DevelopableSimilarity r = check_developable_similarity(x, y);
        v.require(r.theorem_holds, "theorem fails on " + x.name + " vs " + y.name);
        ++cases;
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::KindMismatch) throw;
      }
    }
  }
  v.require(cases >= 20, "only " + std::to_string(cases) + " corpus cases");
}

void round_trip(Verdict& v) {
  for (ProfileKind k : kKinds) {
    const std::string tag(to_string(k));
    const FrameField F = integrate_frenet(profile(expr::parse("0.5+0.2*u"), k, expr::parse("1+u")), 1000);
    const double eps = F.eps_q;
    const PseudoSphere want = eps < 0 ? PseudoSphere::OnH02 : PseudoSphere::OnS12;
    for (const auto& p : F.samples) {
      if (std::abs(inner(p.q, p.q) - eps) > 1e-8 || pseudo_sphere_membership(p.q, 1.0, 1e-8) != want) {
        v.require(false, tag + " q leaves the pseudo-sphere");
        break;
      }
    }
    const FrameField G = frame_field(build_surface(F, BuildMode::developable()), 512);
    const PhiTable phi = total_curvature_param(G);
    double err = 0.0;
    for (std::size_t i = 0; i < G.samples.size(); ++i) {
      const double k1 = 1.0 + G.samples[i].s;
      const double k2 = (0.5 + 0.2 * phi.phi[i]) * k1;
      err = std::max({err, std::abs(G.samples[i].k1 - k1) / k1, std::abs(G.samples[i].k2 - k2) / k2});
    }
    v.require(err <= 1e-4, tag + " relative error " + num(err));
  }
}

void spherical_images(Verdict& v) {
  for (const corpus::Entry& e : corpus::all()) {
    if (e.type == SurfaceType::Cylindrical) continue;
    const RuledSurfaceSpec S = spec(e);
    const FrameField F = frame_field(S, 512);
    const checks::Check q = checks::spherical_image_q(F, S.name, 1e-5);
    const checks::Check a = checks::spherical_image_a(F, S.name, 1e-5);
    v.require(q.passed, S.name + " q image " + num(q.value));
    v.require(a.passed, S.name + " a image " + num(a.value));
  }
}

void corollaries(Verdict& v) {
  const FamilyReport conoid = family_check({spec(corpus::helicoid()), spec(corpus::shifted_helicoid())});
  v.require(conoid.family == Family::Conoid, "H1 pair not Conoid");
  const FamilyReport cyl = family_check({spec(corpus::cylinder()), spec(corpus::parabolic_cylinder())});
  v.require(cyl.family == Family::Cylindrical, "cylinders not Cylindrical");
  const FamilyReport mixed =
      family_check({spec(corpus::helicoid()), spec(corpus::nminus_conoid()), spec(corpus::ntimes_conoid())});
  v.require(mixed.family == Family::None, "mixed kinds not None");
}

int shell(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string("\"") + RULED_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

void cli_contract(Verdict& v) {
  const fs::path dir = canned::fresh_dir("acceptance");
  canned::write_inputs(dir);
  const fs::path log = dir / "log.txt";
  v.require(shell("verify --suite builtin", log) == 0, "verify --suite builtin failed");
  for (int run = 1; run <= 2; ++run) {
    const fs::path out = dir / ("run" + std::to_string(run));
    v.require(shell("reconstruct " + q(dir / "f03.profile") + " --out " + q(out), log) == 0, "reconstruct f03");
    v.require(shell("reconstruct " + q(dir / "f06.profile") + " --out " + q(out), log) == 0, "reconstruct f06");
    v.require(shell("analyze " + q(dir / "h1.surface") + " --out " + q(out / "h1"), log) == 0, "analyze");
    const int pos = shell("compare " + q(dir / "alpha.surface") + " " + q(dir / "beta.surface"), out / "pos.json");
    const int neg = shell("compare " + q(out / "f03.surface") + " " + q(out / "f06.surface"), out / "neg.json");
    const int bad = shell("compare " + q(dir / "missing.surface") + " " + q(dir / "alpha.surface"), log);
    const int parse = shell("compare " + q(dir / "malformed.surface") + " " + q(dir / "alpha.surface"), log);
    const int kind = shell("compare " + q(dir / "h1.surface") + " " + q(dir / "ntimes.surface"), log);
    v.require(pos == 0, "similar pair exit " + std::to_string(pos));
    v.require(neg == 1, "dissimilar pair exit " + std::to_string(neg));
    v.require(bad == 2 && parse == 2, "input error exits " + std::to_string(bad) + "/" + std::to_string(parse));
    v.require(kind == 4, "kind mismatch exit " + std::to_string(kind));
  }
  for (const char* f : {"pos.json", "neg.json", "f03.csv", "f03.surface", "f03.obj", "f06.csv", "h1/summary.json",
                        "h1/frame.csv", "h1/delta.csv"}) {
    const fs::path a = dir / "run1" / f;
    const fs::path b = dir / "run2" / f;
    v.require(fs::exists(a) && read_text_file(a) == read_text_file(b), std::string(f) + " differs between runs");
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Verdict&)>> criteria[] = {
      {"1 frame identity suite", frame_identities},
      {"2 developability equivalence", developability_theorem},
      {"3 third-order ruling equation", third_order_equation},
      {"4 similarity positive/negative", similarity_family},
      {"5 developable similarity", developable_similarity},
      {"6 round-trip reconstruction", round_trip},
      {"7 spherical-image integrals", spherical_images},
      {"8 corollaries", corollaries},
      {"9 CLI contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << name;
    if (!v.ok) std::cout << "  (" << v.why.str() << ")";
    std::cout << std::endl;
    failed += !v.ok;
  }
  return failed == 0 ? 0 : 1;
}
