#include "ruled/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ruled/checks.hpp"
#include "ruled/corpus.hpp"
#include "ruled/errors.hpp"
#include "ruled/expr.hpp"
#include "ruled/reconstruct.hpp"
#include "ruled/surface_file.hpp"

namespace ruled::cli {

using nlohmann::ordered_json;

Tolerances apply_overrides(Tolerances t, std::string_view spec) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const std::size_t end = std::min(spec.find(',', pos), spec.size());
    const std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw FileError("tolerance override '" + std::string(item) + "' needs key=value");
    const std::string_view key = item.substr(0, eq);
    const std::string_view text = item.substr(eq + 1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(v > 0.0) || !std::isfinite(v)) {
      throw FileError("tolerance override '" + std::string(item) + "' needs a positive number");
    }
    if (key == "tol_null") {
      t.tol_null = v;
    } else if (key == "tol_frame") {
      t.tol_frame = v;
    } else if (key == "tol_similar") {
      t.tol_similar = v;
    } else {
      throw FileError("unknown tolerance '" + std::string(key) + "'");
    }
  }
  return t;
}

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const FileError& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    if (e.offset()) err << " (offset " << *e.offset() << ")";
    err << "\n";
    return kInputError;
  } catch (const expr::ParseError& e) {
    err << "error: " << e.what() << " (offset " << e.offset() << ")\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::KindMismatch) return kKindMismatch;
    if (e.code() == ErrorCode::InvalidArgument) return kInputError;
    return kGeometryError;
  }
}

std::string kind_name(bool timelike) { return timelike ? "timelike" : "spacelike"; }

struct Loaded {
  SurfaceDefinition def;
  RuledSurfaceSpec spec;
};

Loaded load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw FileError("no such file '" + path.string() + "'");
  Loaded l;
  l.def = read_surface_definition(path);
  l.spec = to_spec(l.def);
  return l;
}

std::pair<double, double> range_of(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  // Drop the sign of zero so reports never show -0.
  return {*lo == 0.0 ? 0.0 : *lo, *hi == 0.0 ? 0.0 : *hi};
}

std::string csv_row(std::initializer_list<double> values) {
  std::string out;
  bool first = true;
  for (double v : values) {
    if (!first) out += ",";
    out += format_number(v);
    first = false;
  }
  return out + "\n";
}

}  // namespace

std::string obj_mesh(const RuledSurfaceSpec& S, const std::vector<double>& us, double v_min, double v_max,
                     int v_steps) {
  std::string out;
  for (double u : us) {
    const MVec3 k = S.base->position(u);
    const MVec3 q = S.ruling->position(u);
    for (int j = 0; j <= v_steps; ++j) {
      const double v = v_min + (v_max - v_min) * j / v_steps;
      const MVec3 p = k + q * v;
      out += "v " + format_number(p.x1()) + " " + format_number(p.x2()) + " " + format_number(p.x3()) + "\n";
    }
  }
  const int row = v_steps + 1;
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    for (int j = 0; j < v_steps; ++j) {
      const long a = static_cast<long>(i) * row + j + 1;
      const long b = a + 1;
      const long c = a + row;
      const long d = c + 1;
      out += "f " + std::to_string(a) + " " + std::to_string(c) + " " + std::to_string(b) + "\n";
      out += "f " + std::to_string(b) + " " + std::to_string(c) + " " + std::to_string(d) + "\n";
    }
  }
  return out;
}

int analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded L = load(opts.input);
    const RuledSurfaceSpec& S = L.spec;
    SurfaceOptions so;
    so.tol_null = opts.tol.tol_null;
    std::vector<std::string> warnings;
    if (L.def.kind == SurfaceDefinition::Kind::Sampled) {
      warnings.emplace_back("sampled surface: derivatives come from finite differences");
    }

    ordered_json summary;
    summary["version"] = kVersion;
    summary["surface"] = L.def.name;
    out << "surface: " << L.def.name << "\n";

    if (is_cylindrical(S, so)) {
      const bool timelike = surface_is_timelike(S, 0.5 * (S.u_min + S.u_max), 0.0, so.tol_null);
      warnings.emplace_back("cylindrical surface: no Frenet frame, frame sections omitted");
      out << "classification: Cylindrical\n";
      out << "surface kind: " << kind_name(timelike) << "\n";
      summary["classification"] = "Cylindrical";
      summary["surface_kind"] = kind_name(timelike);
    } else {
      const FrameField F = frame_field(S, L.def.samples, so);
      const FrenetResiduals res = verify_frenet(F);
      const DevelopabilityReport dev = developability(S, opts.tol.tol_frame, so, L.def.samples);
      std::vector<double> k1, k2, f;
      for (const auto& p : F.samples) {
        k1.push_back(p.k1);
        k2.push_back(p.k2);
        f.push_back(p.k2 / p.k1);
      }
      const auto [k1_lo, k1_hi] = range_of(k1);
      const auto [k2_lo, k2_hi] = range_of(k2);
      const auto [d_lo, d_hi] = range_of(dev.delta);
      if (res.max() > opts.tol.tol_frame) {
        warnings.push_back("Frenet residual " + format_number(res.max()) + " exceeds tol_frame " +
                           format_number(opts.tol.tol_frame));
      }
      for (const auto& n : dev.notes) warnings.push_back(n);

      out << "classification: " << to_string(F.type) << "\n";
      out << "surface kind: " << kind_name(F.timelike_surface) << "\n";
      out << "eps_q: " << F.eps_q << "  eps_h: " << F.eps_h << "  eps_a: " << F.eps_a() << "\n";
      out << "striction arc length: " << format_number(F.samples.back().s) << "\n";
      out << "k1: [" << format_number(k1_lo) << ", " << format_number(k1_hi) << "]\n";
      out << "k2: [" << format_number(k2_lo) << ", " << format_number(k2_hi) << "]\n";
      out << "developable: " << (dev.developable ? "true" : "false")
          << " (max |T -/+ q| = " << format_number(dev.max_tangent_deviation) << ")\n";
      out << "delta: [" << format_number(d_lo) << ", " << format_number(d_hi) << "]\n";
      out << "frenet residuals: derivative " << format_number(res.max_derivative()) << ", identities "
          << format_number(res.identities) << "\n";

      summary["classification"] = std::string(to_string(F.type));
      summary["surface_kind"] = kind_name(F.timelike_surface);
      summary["eps_q"] = F.eps_q;
      summary["eps_h"] = F.eps_h;
      summary["eps_a"] = F.eps_a();
      summary["samples"] = F.samples.size();
      summary["striction_arc_length"] = F.samples.back().s;
      summary["k1_range"] = {k1_lo, k1_hi};
      summary["k2_range"] = {k2_lo, k2_hi};
      summary["developable"] = dev.developable;
      summary["max_tangent_deviation"] = dev.max_tangent_deviation;
      summary["delta_range"] = {d_lo, d_hi};
      summary["theta_available"] = dev.theta.has_value();
      summary["frenet_residuals"] = {{"dq", res.dq}, {"dh", res.dh}, {"da", res.da}, {"identities", res.identities}};

      if (opts.out_dir) {
        std::filesystem::create_directories(*opts.out_dir);
        const PhiTable phi = total_curvature_param(F);
        std::string frame = "s,u,phi,k1,k2,f,cx,cy,cz,qx,qy,qz,hx,hy,hz,ax,ay,az\n";
        for (std::size_t i = 0; i < F.samples.size(); ++i) {
          const FrameSample& p = F.samples[i];
          frame += csv_row({p.s, p.u, phi.phi[i], p.k1, p.k2, f[i], p.c.x1(), p.c.x2(), p.c.x3(), p.q.x1(), p.q.x2(),
                            p.q.x3(), p.h.x1(), p.h.x2(), p.h.x3(), p.a.x1(), p.a.x2(), p.a.x3()});
        }
        write_text_file(*opts.out_dir / "frame.csv", frame);
        std::string delta = dev.theta ? "s,delta,d,theta\n" : "s,delta\n";
        for (std::size_t i = 0; i < dev.s.size(); ++i) {
          delta += dev.theta ? csv_row({dev.s[i], dev.delta[i], dev.d_profile[i], (*dev.theta)[i]})
                             : csv_row({dev.s[i], dev.delta[i]});
        }
        write_text_file(*opts.out_dir / "delta.csv", delta);
      }
    }

    summary["warnings"] = warnings;
    out << "warnings:";
    if (warnings.empty()) out << " none";
    out << "\n";
    for (const auto& w : warnings) out << "  - " << w << "\n";
    if (opts.out_dir) {
      std::filesystem::create_directories(*opts.out_dir);
      write_text_file(*opts.out_dir / "summary.json", summary.dump(2) + "\n");
    }
    return kOk;
  });
}

int compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded A = load(opts.a);
    const Loaded B = load(opts.b);
    SurfaceOptions so;
    so.tol_null = opts.tol.tol_null;
    const FrameField fa = frame_field(A.spec, A.def.samples, so);
    const FrameField fb = frame_field(B.spec, B.def.samples, so);
    SimilarityOptions sim;
    sim.tol = opts.tol.tol_similar;
    sim.mode = opts.mode;
    sim.search_phi_offset = opts.search_phi_offset;
    const SimilarityReport r = are_similar_ruled(fa, fb, sim);

    ordered_json j;
    j["version"] = kVersion;
    j["alpha"] = A.def.name;
    j["beta"] = B.def.name;
    j["mode"] = std::string(to_string(r.mode));
    j["is_similar"] = r.is_similar;
    j["f_profile_deviation"] = r.f_profile_deviation;
    j["lambda_consistency"] = r.lambda_consistency ? ordered_json(*r.lambda_consistency) : ordered_json(nullptr);
    j["phi_offset"] = r.phi_offset;
    j["phi_overlap"] = r.phi_overlap;
    auto optional_number = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
    j["ruling_deviation"] = optional_number(r.ruling_deviation);
    j["central_normal_deviation"] = optional_number(r.central_normal_deviation);
    j["asymptotic_normal_deviation"] = optional_number(r.asymptotic_normal_deviation);
    j["asymptotic_normal_sign"] = r.asymptotic_normal_sign;
    ordered_json table = ordered_json::array();
    for (const auto& m : r.matched) table.push_back({m.s_beta, m.lambda});
    j["lambda_table"] = table;
    ordered_json matched = ordered_json::array();
    for (const auto& m : r.matched) matched.push_back({m.s_beta, m.s_alpha});
    j["s_alpha_table"] = matched;
    auto profile = [](const FrameField& F) {
      const RatioProfile p = curvature_ratio_profile(F, 65);
      return ordered_json{{"phi", p.phi}, {"f", p.f}};
    };
    j["f_profiles"] = {{"alpha", profile(fa)}, {"beta", profile(fb)}};
    j["notes"] = r.notes;
    out << j.dump(2) << "\n";
    return r.is_similar ? kOk : kNegative;
  });
}

int reconstruct(const ReconstructOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (!std::filesystem::exists(opts.profile)) throw FileError("no such file '" + opts.profile.string() + "'");
    const ProfileDefinition p = read_profile(opts.profile);
    const int steps = opts.steps.value_or(p.steps);
    if (steps < 16) {
      err << "error: steps must be at least 16 (got " << steps << ")\n";
      return kInputError;
    }
    if (opts.developable && opts.theta) {
      err << "error: --theta and --developable are mutually exclusive\n";
      return kInputError;
    }
    if (!(opts.v_max > opts.v_min) || opts.v_steps < 1) {
      err << "error: invalid v range\n";
      return kInputError;
    }
    std::optional<std::string> theta = opts.developable ? std::nullopt : (opts.theta ? opts.theta : p.theta);

    InvariantProfile ip;
    ip.f = expr::parse(p.f);
    ip.kind = *parse_profile_kind(p.kind);
    ip.k1_of_s = expr::parse(p.k1);
    ip.phi_min = p.phi_min;
    ip.phi_max = p.phi_max;
    ip.initial = default_initial_frame(ip.kind);
    const IntegrationResult res = integrate_frenet_detailed(ip, steps);
    const BuildMode mode = theta ? BuildMode::angle(expr::parse(*theta)) : BuildMode::developable();
    const RuledSurfaceSpec S = build_surface(res.frame, mode, p.name);

    const auto& base = dynamic_cast<const SampledCurve&>(*S.base);
    const auto& ruling = dynamic_cast<const SampledCurve&>(*S.ruling);
    SampleTable table;
    table.u = base.nodes();
    table.k = base.points();
    table.q = ruling.points();

    std::filesystem::create_directories(opts.out_dir);
    SurfaceDefinition def;
    def.name = p.name;
    def.kind = SurfaceDefinition::Kind::Sampled;
    def.sampled = p.name + ".csv";
    def.u_min = table.u.front();
    def.u_max = table.u.back();
    def.samples = 512;
    const auto csv_path = opts.out_dir / def.sampled;
    const auto surface_path = opts.out_dir / (p.name + ".surface");
    const auto obj_path = opts.out_dir / (p.name + ".obj");
    write_text_file(csv_path, format_sample_csv(table));
    write_text_file(surface_path, format_surface_definition(def));

    const std::size_t stride = std::max<std::size_t>(1, (table.u.size() - 1) / 256);
    std::vector<double> us;
    for (std::size_t i = 0; i < table.u.size(); i += stride) us.push_back(table.u[i]);
    if (us.back() != table.u.back()) us.push_back(table.u.back());
    write_text_file(obj_path, obj_mesh(S, us, opts.v_min, opts.v_max, opts.v_steps));

    out << "kind: " << to_string(ip.kind) << "\n";
    out << "steps: " << steps << "\n";
    out << "mode: " << (theta ? "angle theta = " + *theta : std::string("developable")) << "\n";
    out << "max drift before re-projection: " << format_number(res.max_drift) << "\n";
    out << "striction arc length: " << format_number(res.frame.samples.back().s) << "\n";
    out << "wrote " << surface_path.string() << "\n";
    out << "wrote " << csv_path.string() << "\n";
    out << "wrote " << obj_path.string() << "\n";
    return kOk;
  });
}

namespace {

using checks::Check;
using checks::make_check;

Check flag(const std::string& name, const std::string& subject, bool ok, std::string detail = {}) {
  return make_check(name, subject, ok ? 0.0 : 1.0, 0.0, std::move(detail));
}

void corpus_checks(std::vector<Check>& out, const VerifyOptions& opts, const checks::Tolerances& tol,
                   const SurfaceOptions& so) {
  for (const corpus::Entry& e : corpus::all()) {
    const RuledSurfaceSpec S = to_spec(e.definition);
    const std::string& name = S.name;
    if (e.type == SurfaceType::Cylindrical) {
      out.push_back(flag("surface.classification", name, classify(S, so) == SurfaceType::Cylindrical, "Cylindrical"));
      out.push_back(flag("surface.kind", name,
                         surface_is_timelike(S, 0.5 * (S.u_min + S.u_max), 0.0, so.tol_null) == e.timelike_surface,
                         kind_name(e.timelike_surface)));
      continue;
    }
    FrameField F = frame_field(S, 512, so);
    if (opts.inject_corruption) checks::corrupt_frame(F);
    for (auto& c : checks::surface_suite(S, F, tol, so)) out.push_back(std::move(c));
    out.push_back(flag("surface.classification", name, F.type == e.type, std::string(to_string(e.type))));
    double k1_dev = 0.0, k2_dev = 0.0;
    for (const auto& p : F.samples) {
      if (e.k1) k1_dev = std::max(k1_dev, std::abs(p.k1 - *e.k1));
      if (e.k2) k2_dev = std::max(k2_dev, std::abs(p.k2 - *e.k2));
    }
    out.push_back(make_check("surface.curvatures_match_oracle", name, std::max(k1_dev, k2_dev), 1e-8));
    const DevelopabilityReport dev = developability(S, tol.delta, so, 512);
    out.push_back(flag("surface.developability_matches_oracle", name, dev.developable == e.developable,
                       e.developable ? "developable" : "not developable"));
    if (e.delta) {
      double worst = 0.0;
      for (double d : dev.delta) worst = std::max(worst, std::abs(d - *e.delta));
      out.push_back(make_check("surface.distribution_parameter_matches_oracle", name, worst, 1e-6));
    }
  }
}

void reconstruct_checks(std::vector<Check>& out, const VerifyOptions& opts, const checks::Tolerances& tol) {
  for (ProfileKind kind : {ProfileKind::TimelikeMinus, ProfileKind::TimelikePlus, ProfileKind::Spacelike}) {
    for (const char* fe : {"0.5", "1+0.1*sin(u)"}) {
      InvariantProfile p;
      p.f = expr::parse(fe);
      p.kind = kind;
      p.initial = default_initial_frame(kind);
      IntegrationResult r = integrate_frenet_detailed(p, 2000);
      const std::string subject = "ode " + std::string(to_string(kind)) + " f=" + fe;
      if (opts.inject_corruption) checks::corrupt_frame(r.frame);
      checks::Tolerances t = tol;
      t.frame = 1e-5;
      for (auto& c : checks::frame_suite(r.frame, subject, t)) out.push_back(std::move(c));
      out.push_back(make_check("reconstruct.projection_drift", subject, r.max_drift, 1e-10));
      if (!opts.inject_corruption) out.push_back(checks::ode3(r.frame, p.f, subject, 1e-4));
    }
    InvariantProfile p;
    p.f = 0.5;
    p.kind = kind;
    p.initial = default_initial_frame(kind);
    p.k1_of_s = expr::parse("1+u");
    const FrameField F = integrate_frenet(p, 1000);
    const RuledSurfaceSpec S = build_surface(F, BuildMode::developable(), "rebuilt");
    const FrameField G = frame_field(S, 512);
    double worst = 0.0;
    for (const auto& s : G.samples) {
      const double k1 = 1.0 + s.s;
      worst = std::max({worst, std::abs(s.k1 - k1) / k1, std::abs(s.k2 - 0.5 * k1) / (0.5 * k1)});
    }
    const std::string subject = "round trip " + std::string(to_string(kind));
    out.push_back(make_check("reconstruct.round_trip_curvatures", subject, worst, 1e-4));
    out.push_back(flag("reconstruct.round_trip_developable", subject, developability(S, 1e-6).developable));
  }
}

void similarity_checks(std::vector<Check>& out, double tol_similar) {
  const InitialFrame init = default_initial_frame(ProfileKind::TimelikeMinus);
  const std::vector<ScalarFunction> k1s = {1.0, 2.0, expr::parse("1+u")};
  const auto family = generate_similar_family(0.3, ProfileKind::TimelikeMinus, k1s, init, 0.0, 1.0, 1000);
  SimilarityOptions so;
  so.tol = tol_similar;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const SimilarityReport r = are_similar_ruled(family[i].frame, family[j].frame, so);
      double lambda_err = 0.0;
      for (const auto& m : r.matched) {
        lambda_err = std::max(lambda_err, std::abs(m.lambda - k1s[j](m.s_beta) / k1s[i](m.s_alpha)));
      }
      const std::string subject = "family " + std::to_string(i) + "-" + std::to_string(j);
      out.push_back(flag("similarity.family_similar", subject, r.is_similar));
      out.push_back(make_check("similarity.lambda_from_k1", subject, lambda_err, 1e-4));
      out.push_back(make_check("similarity.lambda_from_k2", subject, r.lambda_consistency.value_or(1.0), 1e-5));
    }
  }
  InvariantProfile a, b;
  a.f = 0.3;
  b.f = 0.6;
  const SimilarityReport neg = are_similar_ruled(integrate_frenet(a, 1000), integrate_frenet(b, 1000), so);
  out.push_back(flag("similarity.different_f_rejected", "f=0.3 vs f=0.6", !neg.is_similar));
  out.push_back(make_check("similarity.f_deviation", "f=0.3 vs f=0.6", std::abs(neg.f_profile_deviation - 0.3), 1e-3));

  const RuledSurfaceSpec alpha = corpus::angle_tangent_developable("angle-s", expr::parse("u"), 0.25, 2.25);
  const RuledSurfaceSpec beta = corpus::angle_tangent_developable("angle-t2", expr::parse("u*u"), 0.5, 1.5);
  const RuledSurfaceSpec gamma = corpus::angle_tangent_developable("angle-s-shifted", expr::parse("u+3"), 0.0, 1.0);
  const RuledSurfaceSpec delta = corpus::angle_tangent_developable("angle-s-base", expr::parse("u"), 0.0, 1.0);
  struct Case {
    const RuledSurfaceSpec* a;
    const RuledSurfaceSpec* b;
    bool expected;
  };
  for (const Case& c : {Case{&alpha, &beta, true}, Case{&delta, &gamma, false}, Case{&alpha, &alpha, true}}) {
    const DevelopableSimilarity d = check_developable_similarity(*c.a, *c.b);
    const std::string subject = c.a->name + " vs " + c.b->name;
    out.push_back(flag("similarity.developable_theorem_holds", subject, d.theorem_holds));
    out.push_back(flag("similarity.developable_verdict", subject,
                       d.surfaces_similar == c.expected && d.striction_curves_similar == c.expected));
  }

  const auto spec = [](const corpus::Entry& e) { return to_spec(e.definition); };
  const FamilyReport conoid = family_check({spec(corpus::helicoid()), spec(corpus::shifted_helicoid())});
  out.push_back(flag("family.conoid", "H1, shifted H1", conoid.family == Family::Conoid && conoid.kind == "timelike"));
  const FamilyReport cyl = family_check({spec(corpus::cylinder()), spec(corpus::parabolic_cylinder())});
  out.push_back(flag("family.cylindrical", "cylinder, parabolic cylinder", cyl.family == Family::Cylindrical));
  const FamilyReport mixed =
      family_check({spec(corpus::helicoid()), spec(corpus::nminus_conoid()), spec(corpus::ntimes_conoid())});
  out.push_back(flag("family.mixed_kinds", "H1, NMinus conoid, NTimes conoid", mixed.family == Family::None));
}

void print_checks(const std::vector<Check>& cs, bool verbose, std::ostream& out) {
  std::size_t failed = 0;
  for (const Check& c : cs) {
    if (!c.passed) ++failed;
    if (c.passed && !verbose) continue;
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.subject << "]  " << format_number(c.value)
        << " <= " << format_number(c.tol);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "summary: " << cs.size() << " checks, " << failed << " failed\n";
}

}  // namespace

int verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    checks::Tolerances tol;
    tol.frame = opts.tol.tol_frame;
    SurfaceOptions so;
    so.tol_null = opts.tol.tol_null;
    std::vector<Check> cs;
    if (opts.input) {
      const Loaded L = load(*opts.input);
      if (is_cylindrical(L.spec, so)) {
        cs.push_back(flag("surface.classification", L.def.name, true, "Cylindrical"));
      } else {
        FrameField F = frame_field(L.spec, L.def.samples, so);
        if (opts.inject_corruption) checks::corrupt_frame(F);
        cs = checks::surface_suite(L.spec, F, tol, so);
      }
    } else {
      if (opts.suite != "builtin") throw FileError("unknown suite '" + opts.suite + "'");
      corpus_checks(cs, opts, tol, so);
      reconstruct_checks(cs, opts, tol);
      similarity_checks(cs, opts.tol.tol_similar);
    }
    print_checks(cs, opts.verbose, out);
    const bool ok = std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.passed; });
    return ok ? kOk : kNegative;
  });
}

int export_mesh(const ExportOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (opts.u_steps < 1 || opts.v_steps < 1 || !(opts.v_max > opts.v_min)) {
      err << "error: invalid mesh resolution or v range\n";
      return kInputError;
    }
    const Loaded L = load(opts.input);
    std::vector<double> us;
    for (int i = 0; i <= opts.u_steps; ++i) {
      us.push_back(i == opts.u_steps ? L.spec.u_max
                                     : L.spec.u_min + (L.spec.u_max - L.spec.u_min) * i / opts.u_steps);
    }
    write_text_file(opts.output, obj_mesh(L.spec, us, opts.v_min, opts.v_max, opts.v_steps));
    out << "wrote " << opts.output.string() << "\n";
    return kOk;
  });
}

}  // namespace ruled::cli
